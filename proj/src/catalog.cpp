#include "nslen/catalog.hpp"

#include <array>
#include <cctype>
#include <numeric>
#include <optional>

#include "nslen/error.hpp"

namespace nslen {

namespace {

constexpr std::size_t kMaxPoints = 100'000;
constexpr std::size_t kMaxWreathTopDegree = 12;

Permutation cycle_on(std::size_t degree, std::initializer_list<Point> points)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<Point> pts(points);
  for (std::size_t k = 0; k < pts.size(); ++k)
    images[pts[k]] = pts[(k + 1) % pts.size()];
  return Permutation(std::move(images));
}

Permutation range_cycle(std::size_t degree, Point first, Point last)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (Point p = first; p < last; ++p)
    images[p] = p + 1;
  images[last] = first;
  return Permutation(std::move(images));
}

/// Group of 2x2 matrices over F_p acting on the right of nonzero row vectors.
PermGroup matrix_group(int p, const std::vector<std::array<int, 4>> &matrices)
{
  const std::size_t degree = static_cast<std::size_t>(p * p - 1);
  auto index = [p](int a, int b) { return static_cast<Point>(a * p + b - 1); };
  std::vector<Permutation> gens;
  for (const auto &m : matrices) {
    std::vector<Point> images(degree);
    for (int a = 0; a < p; ++a) {
      for (int b = 0; b < p; ++b) {
        if (a == 0 && b == 0)
          continue;
        int x = (a * m[0] + b * m[2]) % p;
        int y = (a * m[1] + b * m[3]) % p;
        images[index(a, b)] = index(x, y);
      }
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens));
}

} // namespace

PermGroup symmetric_group(std::size_t n)
{
  if (n < 1)
    throw Error(ErrorKind::InvalidArgument, "Sym(n) needs n >= 1");
  if (n == 1)
    return PermGroup::trivial(1);
  if (n == 2)
    return PermGroup(2, {cycle_on(2, {0, 1})});
  return PermGroup(n, {cycle_on(n, {0, 1}), range_cycle(n, 0, static_cast<Point>(n - 1))});
}

PermGroup alternating_group(std::size_t n)
{
  if (n < 1)
    throw Error(ErrorKind::InvalidArgument, "Alt(n) needs n >= 1");
  if (n < 3)
    return PermGroup::trivial(n);
  if (n == 3)
    return PermGroup(3, {cycle_on(3, {0, 1, 2})});
  auto last = static_cast<Point>(n - 1);
  Permutation long_cycle = n % 2 == 1 ? range_cycle(n, 0, last) : range_cycle(n, 1, last);
  return PermGroup(n, {cycle_on(n, {0, 1, 2}), long_cycle});
}

PermGroup cyclic_group(std::size_t n)
{
  if (n < 1)
    throw Error(ErrorKind::InvalidArgument, "Cyclic(n) needs n >= 1");
  if (n == 1)
    return PermGroup::trivial(1);
  return PermGroup(n, {range_cycle(n, 0, static_cast<Point>(n - 1))});
}

PermGroup dihedral_group(std::size_t order)
{
  if (order < 2 || order % 2 != 0)
    throw Error(ErrorKind::InvalidArgument, "Dihedral(2n) needs an even order >= 2");
  std::size_t m = order / 2;
  if (m == 1)
    return cyclic_group(2);
  if (m == 2)
    return PermGroup(4, {cycle_on(4, {0, 1}), cycle_on(4, {2, 3})});
  std::vector<Point> reflection(m);
  for (std::size_t i = 0; i < m; ++i)
    reflection[i] = static_cast<Point>(m - 1 - i);
  return PermGroup(m, {range_cycle(m, 0, static_cast<Point>(m - 1)),
                       Permutation(std::move(reflection))});
}

PermGroup direct_product(const PermGroup &a, const PermGroup &b)
{
  const std::size_t da = a.degree();
  const std::size_t degree = da + b.degree();
  std::vector<Permutation> gens;
  for (const auto &g : a.generators())
    gens.push_back(g.extended(degree));
  for (const auto &g : b.generators()) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    for (Point i = 0; i < b.degree(); ++i)
      images[da + i] = static_cast<Point>(da + g[i]);
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup wreath_product(const PermGroup &a, const PermGroup &b)
{
  const std::size_t m = a.degree();
  const std::size_t n = b.degree();
  const std::size_t degree = m * n;
  std::vector<Permutation> gens;
  for (std::size_t copy = 0; copy < n; ++copy) {
    for (const auto &g : a.generators()) {
      std::vector<Point> images(degree);
      std::iota(images.begin(), images.end(), Point{0});
      for (Point i = 0; i < m; ++i)
        images[copy * m + i] = static_cast<Point>(copy * m + g[i]);
      gens.emplace_back(std::move(images));
    }
  }
  for (const auto &g : b.generators()) {
    std::vector<Point> images(degree);
    for (Point j = 0; j < n; ++j) {
      for (Point i = 0; i < m; ++i)
        images[j * m + i] = static_cast<Point>(g[j] * m + i);
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup sl_2_5() { return matrix_group(5, {{1, 1, 0, 1}, {0, 1, 4, 0}}); }

PermGroup gl_2_3() { return matrix_group(3, {{1, 1, 0, 1}, {0, 1, 2, 0}, {2, 0, 0, 1}}); }

PermGroup psl_2_7()
{
  // points 0..6 are field elements, 7 is infinity
  constexpr Point inf = 7;
  std::vector<Point> translate(8), invert(8);
  for (Point x = 0; x < 7; ++x)
    translate[x] = (x + 1) % 7;
  translate[inf] = inf;
  invert[0] = inf;
  invert[inf] = 0;
  for (Point x = 1; x < 7; ++x) {
    Point inv = 1;
    while ((inv * x) % 7 != 1)
      ++inv;
    invert[x] = (7 - inv) % 7;
  }
  return PermGroup(8, {Permutation(std::move(translate)), Permutation(std::move(invert))});
}

PermGroup named_builder(std::string_view name)
{
  std::string key;
  for (char c : name) {
    if (!std::isspace(static_cast<unsigned char>(c)))
      key += c;
  }
  if (key == "SL(2,5)")
    return sl_2_5();
  if (key == "GL(2,3)")
    return gl_2_3();
  if (key == "PSL(2,7)")
    return psl_2_7();
  throw ParseError(ParseError::Reason::UnknownName,
                   "unknown named group \"" + std::string(name) + "\"");
}

std::vector<CatalogEntry> catalog_entries()
{
  return {
    {"Sym(n)", "symmetric group on n points, n >= 1"},
    {"Alt(n)", "alternating group on n points, n >= 1"},
    {"Cyclic(n)", "cyclic group generated by an n-cycle, n >= 1"},
    {"Dihedral(2n)", "dihedral group of order 2n acting on n points"},
    {"DirectProduct(A, B)", "direct product on the disjoint union; also written A x B"},
    {"Wreath(A, B)", "imprimitive wreath product, B of degree <= 12"},
    {"SL(2,5)", "order 120, on the 24 nonzero vectors of F_5^2"},
    {"GL(2,3)", "order 48, on the 8 nonzero vectors of F_3^2"},
    {"PSL(2,7)", "order 168, on the projective line over F_7"},
  };
}

namespace {

/// Recursive-descent parser over the comment-stripped text. Tracks line and
/// column for diagnostics.
class SpecParser {
public:
  explicit SpecParser(std::string_view text)
  {
    // strip '#' comments but keep newlines so positions stay meaningful
    bool comment = false;
    for (char c : text) {
      if (c == '\n')
        comment = false;
      else if (c == '#')
        comment = true;
      text_ += comment ? ' ' : c;
    }
  }

  PermGroup run()
  {
    skip_space();
    if (looking_at_word("degree"))
      return parse_raw();
    PermGroup g = parse_product();
    skip_space();
    if (pos_ != text_.size())
      fail("unexpected text after the group expression");
    return g;
  }

private:
  [[noreturn]] void fail(const std::string &msg,
                         ParseError::Reason reason = ParseError::Reason::Malformed) const
  {
    auto [line, col] = position(pos_);
    throw ParseError(reason,
                     "line " + std::to_string(line) + ", column " + std::to_string(col) +
                       ": " + msg,
                     line, col);
  }

  std::pair<std::size_t, std::size_t> position(std::size_t at) const
  {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool looking_at_word(std::string_view word) const
  {
    if (text_.compare(pos_, word.size(), word) != 0)
      return false;
    std::size_t end = pos_ + word.size();
    return end >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[end]));
  }

  std::string parse_identifier()
  {
    std::string id;
    while (std::isalpha(static_cast<unsigned char>(peek())))
      id += text_[pos_++];
    return id;
  }

  std::size_t parse_number()
  {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    std::size_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
      if (value > kMaxPoints * 10)
        fail("number too large", ParseError::Reason::Range);
    }
    return value;
  }

  void expect(char c)
  {
    skip_space();
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept_product_operator()
  {
    skip_space();
    if (peek() == '*') {
      ++pos_;
      return true;
    }
    // U+00D7 MULTIPLICATION SIGN in UTF-8
    if (text_.compare(pos_, 2, "\xC3\x97") == 0) {
      pos_ += 2;
      return true;
    }
    if (peek() == 'x' && pos_ + 1 < text_.size() &&
        std::isspace(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      return true;
    }
    return false;
  }

  PermGroup parse_product()
  {
    PermGroup g = parse_atom();
    while (accept_product_operator())
      g = checked(direct_product(g, parse_atom()));
    return g;
  }

  PermGroup checked(PermGroup g) const
  {
    if (g.degree() > kMaxPoints)
      fail("group acts on more than " + std::to_string(kMaxPoints) + " points",
           ParseError::Reason::Range);
    return g;
  }

  PermGroup parse_atom()
  {
    skip_space();
    if (peek() == '(') {
      ++pos_;
      PermGroup g = parse_product();
      expect(')');
      return g;
    }
    std::size_t start = pos_;
    std::string name = parse_identifier();
    if (name.empty())
      fail("expected a group expression");
    expect('(');

    auto range_fail = [&](const std::string &msg) {
      pos_ = start;
      fail(msg, ParseError::Reason::Range);
    };

    if (name == "Sym" || name == "Alt" || name == "Cyclic" || name == "Dihedral") {
      std::size_t n = parse_number();
      expect(')');
      if (name == "Dihedral") {
        if (n < 2 || n % 2 != 0)
          range_fail("Dihedral(2n) needs an even order >= 2, got " + std::to_string(n));
        if (n / 2 > kMaxPoints)
          range_fail("Dihedral order too large");
        return dihedral_group(n);
      }
      if (n < 1)
        range_fail(name + "(n) needs n >= 1, got " + std::to_string(n));
      if (n > kMaxPoints)
        range_fail(name + "(n) with n > " + std::to_string(kMaxPoints));
      if (name == "Sym")
        return symmetric_group(n);
      if (name == "Alt")
        return alternating_group(n);
      return cyclic_group(n);
    }
    if (name == "DirectProduct" || name == "Wreath") {
      PermGroup a = parse_product();
      expect(',');
      PermGroup b = parse_product();
      expect(')');
      if (name == "DirectProduct")
        return checked(direct_product(a, b));
      if (b.degree() > kMaxWreathTopDegree)
        range_fail("Wreath(A, B) needs B of degree <= " + std::to_string(kMaxWreathTopDegree));
      if (a.degree() * b.degree() > kMaxPoints)
        range_fail("wreath product acts on too many points");
      return wreath_product(a, b);
    }
    if (name == "SL" || name == "GL" || name == "PSL") {
      std::size_t d = parse_number();
      expect(',');
      std::size_t q = parse_number();
      expect(')');
      std::string full = name + "(" + std::to_string(d) + "," + std::to_string(q) + ")";
      if (full != "SL(2,5)" && full != "GL(2,3)" && full != "PSL(2,7)") {
        pos_ = start;
        fail("unknown named group " + full, ParseError::Reason::UnknownName);
      }
      return named_builder(full);
    }
    pos_ = start;
    fail("unknown builder \"" + name + "\"", ParseError::Reason::UnknownName);
  }

  PermGroup parse_raw()
  {
    // '/' separates lines in single-line raw specs
    pos_ += std::string_view("degree").size();
    std::size_t degree = parse_number();
    if (degree < 1 || degree > kMaxPoints)
      fail("degree must lie in 1.." + std::to_string(kMaxPoints), ParseError::Reason::Range);
    std::vector<Permutation> gens;
    for (;;) {
      skip_separators();
      if (pos_ >= text_.size())
        break;
      if (!looking_at_word("gen"))
        fail("expected \"gen\"");
      pos_ += 3;
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '\n' && text_[pos_] != '/')
        ++pos_;
      try {
        gens.push_back(parse_permutation(std::string_view(text_).substr(start, pos_ - start),
                                         degree));
      } catch (const ParseError &e) {
        auto [line, col] = position(start);
        throw ParseError(e.reason(),
                         "line " + std::to_string(line) + ", generator starting at column " +
                           std::to_string(col) + ": " + e.what(),
                         line, col + e.column() - 1);
      }
    }
    return PermGroup(degree, std::move(gens));
  }

  void skip_separators()
  {
    while (pos_ < text_.size() &&
           (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/'))
      ++pos_;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

} // namespace

PermGroup parse_group_spec(std::string_view text) { return SpecParser(text).run(); }

std::string print_raw_spec(const PermGroup &group)
{
  std::string out = "degree " + std::to_string(group.degree()) + "\n";
  for (const auto &g : group.generators())
    out += "gen " + g.to_string() + "\n";
  return out;
}

} // namespace nslen
