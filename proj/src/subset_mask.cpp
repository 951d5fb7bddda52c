#include "kkb/subset_mask.hpp"

#include "kkb/error.hpp"

namespace kkb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::TrivialUpperSet: return "TrivialUpperSet";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::NotAntichain: return "NotAntichain";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::MissingMcParams: return "MissingMcParams";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::DegenerateDraw: return "DegenerateDraw";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::TooFewRecords: return "TooFewRecords";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::uint64_t width_mask(int width) {
  return width >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << width) - 1);
}

void check_width(int width) {
  if (width < 0 || width > SubsetMask::kMaxWidth) {
    throw Error(ErrorCode::WidthMismatch, "mask width " + std::to_string(width) + " outside [0, 64]");
  }
}

}  // namespace

SubsetMask::SubsetMask(int width, std::uint64_t bits) : width_(width), bits_(bits) {
  check_width(width);
  if ((bits & ~width_mask(width)) != 0) {
    throw Error(ErrorCode::WidthMismatch, "bits set beyond width " + std::to_string(width));
  }
}

SubsetMask SubsetMask::full_of(int width) {
  check_width(width);
  return SubsetMask(width, width_mask(width));
}

SubsetMask SubsetMask::of(int width, std::span<const int> elements) {
  check_width(width);
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= width) {
      throw Error(ErrorCode::WidthMismatch,
                  "element " + std::to_string(e) + " outside ground set of size " + std::to_string(width));
    }
    bits |= std::uint64_t{1} << e;
  }
  return SubsetMask(width, bits);
}

bool SubsetMask::is_subset_of(const SubsetMask& other) const {
  if (width_ != other.width_) throw Error(ErrorCode::WidthMismatch, "subset test across widths");
  return (bits_ & ~other.bits_) == 0;
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string SubsetMask::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

SubsetMask SubsetMask::operator&(const SubsetMask& other) const {
  if (width_ != other.width_) throw Error(ErrorCode::WidthMismatch, "intersection across widths");
  return SubsetMask(width_, bits_ & other.bits_);
}

SubsetMask SubsetMask::operator|(const SubsetMask& other) const {
  if (width_ != other.width_) throw Error(ErrorCode::WidthMismatch, "union across widths");
  return SubsetMask(width_, bits_ | other.bits_);
}

}  // namespace kkb
