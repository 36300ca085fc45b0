#include "sepsg/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace sepsg {

  ////////////////////////////////////////////////////////////////////////
  // SubsetMask
  ////////////////////////////////////////////////////////////////////////

  SubsetMask::SubsetMask(std::size_t ambient, std::uint64_t bits)
      : _ambient(ambient), _bits(bits) {
    if (ambient > kMaxOrder) {
      raise(ErrorCode::OrderTooLarge,
            "subset ambient order " + std::to_string(ambient)
                + " exceeds " + std::to_string(kMaxOrder));
    }
    if ((bits & ~full(ambient).bits()) != 0) {
      raise(ErrorCode::InvalidArgument,
            "subset has elements outside [0, " + std::to_string(ambient)
                + ")");
    }
  }

  SubsetMask SubsetMask::full(std::size_t ambient) {
    SubsetMask m;
    m._ambient = ambient;
    m._bits    = ambient >= 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << ambient) - 1;
    return m;
  }

  SubsetMask SubsetMask::singleton(std::size_t ambient, std::size_t x) {
    return {ambient, std::uint64_t{1} << x};
  }

  SubsetMask SubsetMask::with(std::size_t x) const {
    return {_ambient, _bits | (std::uint64_t{1} << x)};
  }

  SubsetMask SubsetMask::complement() const {
    SubsetMask m = *this;
    m._bits      = full(_ambient)._bits & ~_bits;
    return m;
  }

  bool SubsetMask::subset_of(SubsetMask const& other) const {
    return (_bits & ~other._bits) == 0;
  }

  bool SubsetMask::intersects(SubsetMask const& other) const {
    return (_bits & other._bits) != 0;
  }

  std::vector<Element> SubsetMask::elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::uint64_t b = _bits; b != 0; b &= b - 1) {
      out.push_back(static_cast<Element>(std::countr_zero(b)));
    }
    return out;
  }

  SubsetMask SubsetMask::operator|(SubsetMask const& other) const {
    SubsetMask m = *this;
    m._bits |= other._bits;
    return m;
  }

  SubsetMask SubsetMask::operator&(SubsetMask const& other) const {
    SubsetMask m = *this;
    m._bits &= other._bits;
    return m;
  }

  SubsetMask SubsetMask::operator-(SubsetMask const& other) const {
    SubsetMask m = *this;
    m._bits &= ~other._bits;
    return m;
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroup
  ////////////////////////////////////////////////////////////////////////

  std::optional<Triple> check_associativity(std::size_t n,
                                            std::span<Element const> t) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t const xy = t[x * n + y];
        for (std::size_t z = 0; z < n; ++z) {
          if (t[xy * n + z] != t[x * n + t[y * n + z]]) {
            return Triple{static_cast<Element>(x),
                          static_cast<Element>(y),
                          static_cast<Element>(z)};
          }
        }
      }
    }
    return std::nullopt;
  }

  NotAssociativeError::NotAssociativeError(Triple w)
      : Error(ErrorCode::NotAssociative,
              "table is not associative: (xy)z != x(yz) for (x, y, z) = ("
                  + std::to_string(w.x) + ", " + std::to_string(w.y) + ", "
                  + std::to_string(w.z) + ")"),
        _witness(w) {}

  Semigroup Semigroup::from_table(std::size_t                 n,
                                  std::vector<Element>        table,
                                  std::vector<std::string> names) {
    if (n == 0) {
      raise(ErrorCode::MalformedInput, "order must be positive");
    }
    if (n > kMaxOrder) {
      raise(ErrorCode::OrderTooLarge,
            "order " + std::to_string(n) + " exceeds "
                + std::to_string(kMaxOrder));
    }
    if (table.size() != n * n) {
      raise(ErrorCode::MalformedInput,
            "table has " + std::to_string(table.size())
                + " entries, expected " + std::to_string(n * n));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= n) {
        raise(ErrorCode::MalformedInput,
              "entry " + std::to_string(table[i]) + " at row "
                  + std::to_string(i / n) + ", column "
                  + std::to_string(i % n) + " is out of range");
      }
    }
    if (!names.empty()) {
      if (names.size() != n) {
        raise(ErrorCode::MalformedInput,
              "expected " + std::to_string(n) + " element names, got "
                  + std::to_string(names.size()));
      }
      std::set<std::string> seen(names.begin(), names.end());
      if (seen.size() != n) {
        raise(ErrorCode::MalformedInput, "element names are not distinct");
      }
    }
    if (auto w = check_associativity(n, table)) {
      throw NotAssociativeError(*w);
    }
    Semigroup s;
    s._order = n;
    s._table = std::move(table);
    s._names = std::move(names);
    return s;
  }

  std::string Semigroup::element_name(std::size_t x) const {
    return has_names() ? _names[x] : std::to_string(x);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text formats
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::vector<std::string> split_ws(std::string_view line) {
      std::vector<std::string> out;
      std::string              tok;
      std::istringstream       in{std::string(line)};
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    std::optional<std::size_t> parse_index(std::string_view tok) {
      std::size_t v   = 0;
      auto [ptr, ec]  = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        return std::nullopt;
      }
      return v;
    }

    // Declared names take precedence over numerals, so a table naming an
    // element "1" refers to that element, not to index 1.
    std::optional<std::size_t> resolve(std::vector<std::string> const& names,
                                       std::string_view                 tok) {
      if (!names.empty()) {
        auto it = std::find(names.begin(), names.end(), tok);
        if (it != names.end()) {
          return static_cast<std::size_t>(it - names.begin());
        }
      }
      return parse_index(tok);
    }

    class LineCursor {
     public:
      explicit LineCursor(std::string_view text) : _text(text) {}

      // Next non-blank line, or nothing at end of input.
      std::optional<std::string_view> next() {
        while (_pos < _text.size()) {
          auto end = _text.find('\n', _pos);
          if (end == std::string_view::npos) {
            end = _text.size();
          }
          auto line = _text.substr(_pos, end - _pos);
          _pos      = end + 1;
          ++_line_no;
          if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
            return line;
          }
        }
        return std::nullopt;
      }

      std::size_t line_no() const { return _line_no; }

     private:
      std::string_view _text;
      std::size_t      _pos     = 0;
      std::size_t      _line_no = 0;
    };

    [[noreturn]] void malformed(LineCursor const& c, std::string const& msg) {
      raise(ErrorCode::MalformedInput,
            "line " + std::to_string(c.line_no()) + ": " + msg);
    }

    std::optional<Semigroup> parse_one(LineCursor& cur) {
      auto line = cur.next();
      if (!line) {
        return std::nullopt;
      }
      std::vector<std::string> names;
      auto first = line->find_first_not_of(" \t");
      if ((*line)[first] == '#') {
        names = split_ws(line->substr(first + 1));
        line  = cur.next();
        if (!line) {
          malformed(cur, "missing order line after element names");
        }
      }
      auto order_toks = split_ws(*line);
      if (order_toks.size() != 1) {
        malformed(cur, "expected a single integer order");
      }
      auto n = parse_index(order_toks[0]);
      if (!n || *n == 0) {
        malformed(cur, "invalid order '" + order_toks[0] + "'");
      }
      if (*n > kMaxOrder) {
        raise(ErrorCode::OrderTooLarge,
              "order " + order_toks[0] + " exceeds " + std::to_string(kMaxOrder));
      }
      if (!names.empty() && names.size() != *n) {
        malformed(cur,
                  "declared " + std::to_string(names.size())
                      + " names for order " + std::to_string(*n));
      }
      std::vector<Element> table;
      table.reserve(*n * *n);
      for (std::size_t row = 0; row < *n; ++row) {
        auto r = cur.next();
        if (!r) {
          malformed(cur, "expected " + std::to_string(*n) + " rows, got "
                             + std::to_string(row));
        }
        auto toks = split_ws(*r);
        if (toks.size() != *n) {
          malformed(cur, "row has " + std::to_string(toks.size())
                             + " entries, expected " + std::to_string(*n));
        }
        for (auto const& tok : toks) {
          auto v = resolve(names, tok);
          if (!v || *v >= *n) {
            malformed(cur, "unknown element '" + tok + "'");
          }
          table.push_back(static_cast<Element>(*v));
        }
      }
      return Semigroup::from_table(*n, std::move(table), std::move(names));
    }

  }  // namespace

  Semigroup parse_semigroup(std::string_view text) {
    LineCursor cur(text);
    auto       s = parse_one(cur);
    if (!s) {
      raise(ErrorCode::MalformedInput, "empty table input");
    }
    if (cur.next()) {
      malformed(cur, "trailing content after table");
    }
    return std::move(*s);
  }

  std::vector<Semigroup> parse_semigroups(std::string_view text) {
    LineCursor             cur(text);
    std::vector<Semigroup> out;
    while (auto s = parse_one(cur)) {
      out.push_back(std::move(*s));
    }
    return out;
  }

  std::string format_semigroup(Semigroup const& s) {
    std::string out;
    std::size_t n = s.order();
    if (s.has_names()) {
      out += '#';
      for (auto const& name : s.names()) {
        out += ' ';
        out += name;
      }
      out += '\n';
    }
    out += std::to_string(n) + '\n';
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (y != 0) {
          out += ' ';
        }
        out += s.element_name(s.product(x, y));
      }
      out += '\n';
    }
    return out;
  }

  SubsetMask parse_subset(Semigroup const& s, std::string_view literal) {
    auto b = literal.find_first_not_of(" \t");
    auto e = literal.find_last_not_of(" \t\r\n");
    if (b == std::string_view::npos || literal[b] != '{' || literal[e] != '}') {
      raise(ErrorCode::MalformedInput,
            "subset literal must be enclosed in braces: '"
                + std::string(literal) + "'");
    }
    auto body = literal.substr(b + 1, e - b - 1);
    auto mask = s.empty();
    if (body.find_first_not_of(" \t") == std::string_view::npos) {
      return mask;
    }
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      auto tok   = body.substr(start, comma == std::string_view::npos
                                        ? std::string_view::npos
                                        : comma - start);
      auto tb    = tok.find_first_not_of(" \t");
      auto te    = tok.find_last_not_of(" \t");
      if (tb == std::string_view::npos) {
        raise(ErrorCode::MalformedInput, "empty element in subset literal");
      }
      tok = tok.substr(tb, te - tb + 1);
      std::optional<std::size_t> idx;
      if (s.has_names()) {
        auto const& names = s.names();
        auto        it    = std::find(names.begin(), names.end(), tok);
        if (it != names.end()) {
          idx = static_cast<std::size_t>(it - names.begin());
        }
      } else {
        idx = parse_index(tok);
      }
      if (!idx || *idx >= s.order()) {
        raise(ErrorCode::MalformedInput,
              "unknown element '" + std::string(tok) + "' in subset literal");
      }
      mask = mask.with(*idx);
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    return mask;
  }

  std::string format_subset(Semigroup const& s, SubsetMask const& a) {
    std::string out = "{";
    bool        first = true;
    for (auto x : a.elements()) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += s.element_name(x);
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // Subset algebra
  ////////////////////////////////////////////////////////////////////////

  void check_ambient(Semigroup const& s, SubsetMask const& a) {
    if (a.ambient() != s.order()) {
      raise(ErrorCode::AmbientMismatch,
            "subset over " + std::to_string(a.ambient())
                + " elements used with a semigroup of order "
                + std::to_string(s.order()));
    }
  }

  void check_enumerable(Semigroup const& s) {
    if (s.order() > kMaxEnumerableOrder) {
      raise(ErrorCode::OrderTooLarge,
            "subset enumeration needs order <= "
                + std::to_string(kMaxEnumerableOrder));
    }
  }

  SubsetMask multiply_subsets(Semigroup const&  s,
                              SubsetMask const& a,
                              SubsetMask const& b) {
    check_ambient(s, a);
    check_ambient(s, b);
    std::uint64_t bits = 0;
    auto const    bs   = b.elements();
    for (auto x : a.elements()) {
      for (auto y : bs) {
        bits |= std::uint64_t{1} << s.product(x, y);
      }
    }
    return {s.order(), bits};
  }

  SubsetMask power_subset(Semigroup const& s, SubsetMask const& a,
                          std::size_t k) {
    check_ambient(s, a);
    if (k == 0) {
      raise(ErrorCode::InvalidArgument, "subset power must be positive");
    }
    SubsetMask p = a;
    for (std::size_t i = 1; i < k; ++i) {
      p = multiply_subsets(s, p, a);
    }
    return p;
  }

  bool is_subsemigroup(Semigroup const& s, SubsetMask const& a) {
    check_ambient(s, a);
    return !a.is_empty() && multiply_subsets(s, a, a).subset_of(a);
  }

  SubsetMask closure(Semigroup const& s, SubsetMask const& a) {
    check_ambient(s, a);
    SubsetMask c = a;
    while (true) {
      SubsetMask next = c | multiply_subsets(s, c, c);
      if (next == c) {
        return c;
      }
      c = next;
    }
  }

  std::optional<Element> identity_element(Semigroup const& s) {
    std::size_t n = s.order();
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) {
        ok = s.product(e, x) == x && s.product(x, e) == x;
      }
      if (ok) {
        return static_cast<Element>(e);
      }
    }
    return std::nullopt;
  }

  bool is_minimal_subsemigroup(Semigroup const& s, SubsetMask const& a) {
    if (!is_subsemigroup(s, a)) {
      return false;
    }
    // Any proper non-empty subsemigroup contains the closure of one of its
    // elements, so it suffices to look at monogenic subsemigroups.
    for (auto x : a.elements()) {
      if (closure(s, SubsetMask::singleton(s.order(), x)) != a) {
        return false;
      }
    }
    return true;
  }

  std::vector<SubsetMask> all_subsemigroups(Semigroup const& s) {
    check_enumerable(s);
    std::vector<SubsetMask> out;
    std::uint64_t const     top = s.full().bits();
    for (std::uint64_t m = 1; m != 0 && m <= top; ++m) {
      SubsetMask a(s.order(), m);
      if (is_subsemigroup(s, a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  Semigroup restrict_to(Semigroup const& s, SubsetMask const& a) {
    if (!is_subsemigroup(s, a)) {
      raise(ErrorCode::NotASubsemigroup,
            "cannot restrict to " + format_subset(s, a)
                + ": not a subsemigroup");
    }
    auto const               elems = a.elements();
    std::vector<std::size_t> pos(s.order(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      pos[elems[i]] = i;
    }
    std::vector<Element>     table;
    std::vector<std::string> names;
    for (auto x : elems) {
      names.push_back(s.element_name(x));
      for (auto y : elems) {
        table.push_back(static_cast<Element>(pos[s.product(x, y)]));
      }
    }
    return Semigroup::from_table(elems.size(), std::move(table),
                                 std::move(names));
  }

}  // namespace sepsg
