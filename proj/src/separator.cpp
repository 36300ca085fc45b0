#include "sepsg/separator.hpp"

namespace sepsg {

  namespace {
    // Bit patterns of xA and Ax for a single x.
    std::uint64_t left_image(Semigroup const& s, std::size_t x,
                             std::vector<Element> const& as) {
      std::uint64_t bits = 0;
      for (auto a : as) {
        bits |= std::uint64_t{1} << s.product(x, a);
      }
      return bits;
    }

    std::uint64_t right_image(Semigroup const& s, std::size_t x,
                              std::vector<Element> const& as) {
      std::uint64_t bits = 0;
      for (auto a : as) {
        bits |= std::uint64_t{1} << s.product(a, x);
      }
      return bits;
    }
  }  // namespace

  std::string_view to_string(SeparatorKind kind) {
    switch (kind) {
      case SeparatorKind::EmptySeparator:
        return "empty-separator";
      case SeparatorKind::Including:
        return "including";
      case SeparatorKind::Excluding:
        return "excluding";
    }
    return "?";
  }

  SubsetMask idealizer(Semigroup const& s, SubsetMask const& a) {
    check_ambient(s, a);
    auto const    as   = a.elements();
    std::uint64_t bits = 0;
    for (std::size_t x = 0; x < s.order(); ++x) {
      std::uint64_t img = left_image(s, x, as) | right_image(s, x, as);
      if ((img & ~a.bits()) == 0) {
        bits |= std::uint64_t{1} << x;
      }
    }
    return {s.order(), bits};
  }

  SubsetMask separator(Semigroup const& s, SubsetMask const& a) {
    return idealizer(s, a) & idealizer(s, a.complement());
  }

  bool is_separator_including(Semigroup const& s, SubsetMask const& a) {
    return separator(s, a).subset_of(a);
  }

  bool is_separator_excluding(Semigroup const& s, SubsetMask const& a) {
    return separator(s, a).subset_of(a.complement());
  }

  SeparatorKind classify(Semigroup const& s, SubsetMask const& a) {
    auto const sep = separator(s, a);
    if (sep.is_empty()) {
      return SeparatorKind::EmptySeparator;
    }
    if (sep.subset_of(a)) {
      return SeparatorKind::Including;
    }
    if (sep.subset_of(a.complement())) {
      return SeparatorKind::Excluding;
    }
    raise(ErrorCode::InternalTrichotomyViolation,
          "separator " + format_subset(s, sep) + " of " + format_subset(s, a)
              + " meets both the subset and its complement");
  }

  std::vector<SubsetMask> separator_fixed_points(Semigroup const& s) {
    check_enumerable(s);
    std::vector<SubsetMask> out;
    std::uint64_t const     top = s.full().bits();
    for (std::uint64_t m = 1; m <= top; ++m) {
      SubsetMask a(s.order(), m);
      if (separator(s, a) == a) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<SubsetMask> separator_table(Semigroup const& s) {
    check_enumerable(s);
    std::uint64_t const     top = s.full().bits();
    std::vector<SubsetMask> out;
    out.reserve(top + 1);
    for (std::uint64_t m = 0; m <= top; ++m) {
      out.push_back(separator(s, SubsetMask(s.order(), m)));
    }
    return out;
  }

}  // namespace sepsg
