#include "nslen/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "nslen/error.hpp"

namespace nslen {

Permutation::Permutation(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorKind::InvalidArgument, "image array is not a bijection");
    seen[x] = true;
  }
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

Point Permutation::first_moved_point() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

Permutation Permutation::operator*(const Permutation &q) const
{
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[i] = q.images_[images_[i]];
  return r;
}

Permutation &Permutation::operator*=(const Permutation &q)
{
  for (auto &x : images_)
    x = q.images_[x];
  return *this;
}

Permutation Permutation::inverse() const
{
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::uint64_t k) const
{
  Permutation result(degree());
  Permutation base = *this;
  while (k) {
    if (k & 1u)
      result *= base;
    base = base * base;
    k >>= 1u;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation &g) const
{
  // g^-1 x g maps g(i) to g(x(i))
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[g.images_[i]] = g.images_[images_[i]];
  return r;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t result = 1;
  for (const auto &cycle : cycles())
    result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> done(images_.size(), false);
  for (Point i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i)
      continue;
    std::vector<Point> cycle;
    for (Point j = i; !done[j]; j = images_[j]) {
      done[j] = true;
      cycle.push_back(j);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::string out;
  for (const auto &cycle : cs) {
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k)
        out += ' ';
      out += std::to_string(cycle[k] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation Permutation::extended(std::size_t degree) const
{
  Permutation r(std::max(degree, images_.size()));
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

std::size_t Permutation::hash() const noexcept
{
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ images_.size();
  for (Point x : images_) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xbf58476d1ce4e5b9ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}

namespace {

class CycleParser {
public:
  CycleParser(std::string_view text, std::size_t degree)
    : text_(text), degree_(degree), used_(degree, false) {}

  Permutation run()
  {
    skip_space();
    std::vector<Point> images(degree_);
    std::iota(images.begin(), images.end(), Point{0});

    if (peek() == '(') {
      // "()" is only legal as the whole expression
      std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (peek() == ')') {
        ++pos_;
        skip_space();
        if (pos_ != text_.size())
          fail("unexpected text after \"()\"");
        return Permutation(std::move(images));
      }
      pos_ = save;
    }

    std::size_t count = 0;
    while (pos_ < text_.size()) {
      auto cycle = parse_cycle();
      for (std::size_t k = 0; k < cycle.size(); ++k)
        images[cycle[k]] = cycle[(k + 1) % cycle.size()];
      ++count;
      skip_space();
    }
    if (count == 0)
      fail("empty permutation expression");
    return Permutation(std::move(images));
  }

private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string &msg,
                         ParseError::Reason reason = ParseError::Reason::Malformed)
  {
    throw ParseError(reason, "column " + std::to_string(pos_ + 1) + ": " + msg, 1,
                     pos_ + 1);
  }

  std::vector<Point> parse_cycle()
  {
    if (peek() != '(')
      fail("expected '('");
    ++pos_;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (peek() == ')') {
        ++pos_;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a point or ')'");
      std::size_t start = pos_;
      std::uint64_t value = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
        if (value > (1ull << 40))
          fail("point out of range", ParseError::Reason::PointOutOfRange);
        ++pos_;
      }
      if (value < 1 || value > degree_) {
        pos_ = start;
        fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree_),
             ParseError::Reason::PointOutOfRange);
      }
      Point p = static_cast<Point>(value - 1);
      if (used_[p]) {
        pos_ = start;
        fail("point " + std::to_string(value) + " repeated",
             ParseError::Reason::RepeatedPoint);
      }
      used_[p] = true;
      cycle.push_back(p);
    }
    if (cycle.size() < 2)
      fail("a cycle needs at least two points");
    return cycle;
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
  std::vector<bool> used_;
};

} // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree)
{
  return CycleParser(text, degree).run();
}

Permutation compose(const Permutation &p, const Permutation &q)
{
  if (p.degree() != q.degree())
    throw Error(ErrorKind::DegreeMismatch,
                "cannot compose permutations of degree " + std::to_string(p.degree()) +
                  " and " + std::to_string(q.degree()));
  return p * q;
}

Permutation inverse(const Permutation &p) { return p.inverse(); }

std::uint64_t element_order(const Permutation &p) { return p.order(); }

Permutation commutator(const Permutation &x, const Permutation &y)
{
  return x.inverse() * y.inverse() * x * y;
}

} // namespace nslen
