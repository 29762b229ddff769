#include "caygen/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "caygen/error.hpp"

namespace caygen {

namespace {

void check_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidArgument("permutation degree mismatch: " + std::to_string(p.degree()) + " vs " +
                          std::to_string(q.degree()));
  }
}

bool is_bijection(std::span<const int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int x : images) {
    if (x < 0 || static_cast<std::size_t>(x) >= images.size() || seen[static_cast<std::size_t>(x)]) {
      return false;
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

}  // namespace

Permutation::Permutation(int n) {
  if (n < 1) throw InvalidArgument("permutation degree must be >= 1");
  images_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images_[static_cast<std::size_t>(i)] = i;
}

Permutation Permutation::from_images(std::vector<int> images) {
  if (images.empty()) throw InvalidArgument("permutation degree must be >= 1");
  if (!is_bijection(images)) throw InvalidArgument("image table is not a bijection");
  return Permutation(std::move(images), true);
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<int> zero_based(images.begin(), images.end());
  for (int& x : zero_based) --x;
  return from_images(std::move(zero_based));
}

Permutation Permutation::transposition(int n, int a, int b) {
  return Transposition::make(a, b).to_permutation(n);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Transposition Transposition::make(int i, int j) {
  if (i == j) throw InvalidArgument("transposition needs two distinct points");
  if (i < 1 || j < 1) throw InvalidArgument("transposition points are 1-based");
  return i < j ? Transposition{i, j} : Transposition{j, i};
}

Permutation Transposition::to_permutation(int n) const {
  if (b > n) throw InvalidArgument("transposition point exceeds degree " + std::to_string(n));
  Permutation p(n);
  std::vector<int> images(p.images().begin(), p.images().end());
  std::swap(images[static_cast<std::size_t>(a - 1)], images[static_cast<std::size_t>(b - 1)]);
  return Permutation::from_images(std::move(images));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_same_degree(p, q);
  std::vector<int> out(q.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = p.images_[static_cast<std::size_t>(q.images_[i])];
  }
  return Permutation(std::move(out), true);
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(p.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[static_cast<std::size_t>(p.images_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(out), true);
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  check_same_degree(g, x);
  return compose(compose(g, x), inverse(g));
}

Parity parity(const Permutation& p) {
  // n minus the number of cycles is the length of a minimal transposition decomposition.
  const int n = p.degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++cycles;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) seen[static_cast<std::size_t>(j)] = 1;
  }
  return (n - cycles) % 2 == 0 ? Parity::even : Parity::odd;
}

std::uint64_t factorial(int n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  if (n > 20) throw CapacityError(std::to_string(n) + "! does not fit in 64 bits");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank(const Permutation& p) {
  const int n = p.degree();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n; ++j) {
      if (p(j) < p(i)) ++smaller_after;
    }
    r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller_after);
  }
  return r;
}

Permutation unrank(std::uint64_t r, int n) {
  if (n < 1) throw InvalidArgument("permutation degree must be >= 1");
  if (r >= factorial(n)) {
    throw InvalidArgument("rank " + std::to_string(r) + " out of range for degree " + std::to_string(n));
  }
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<std::uint64_t>(n - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(r % base);
    r /= base;
  }
  std::vector<int> unused(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) unused[static_cast<std::size_t>(i)] = i;
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto it = unused.begin() + digits[static_cast<std::size_t>(i)];
    images[static_cast<std::size_t>(i)] = *it;
    unused.erase(it);
  }
  return Permutation(std::move(images), true);
}

namespace {

std::vector<int> parse_ints(std::string_view text, std::size_t offset_in_line) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + i) {
      throw ParseError("expected an integer point", 1, static_cast<int>(offset_in_line + i + 1));
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text, int n) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '(') {
    if (n < 1) throw InvalidArgument("cycle notation needs an explicit degree");
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::size_t pos = first;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
        continue;
      }
      if (text[pos] != '(') throw ParseError("expected '('", 1, static_cast<int>(pos + 1));
      const auto close = text.find(')', pos);
      if (close == std::string_view::npos) throw ParseError("unterminated cycle", 1, static_cast<int>(pos + 1));
      const auto cycle = parse_ints(text.substr(pos + 1, close - pos - 1), pos + 1);
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const int point = cycle[k];
        if (point < 1 || point > n) throw ParseError("point out of range", 1, static_cast<int>(pos + 2));
        if (used[static_cast<std::size_t>(point - 1)]) {
          throw ParseError("point repeated across cycles", 1, static_cast<int>(pos + 2));
        }
        used[static_cast<std::size_t>(point - 1)] = 1;
        images[static_cast<std::size_t>(point - 1)] = cycle[(k + 1) % cycle.size()] - 1;
      }
      pos = close + 1;
    }
    return Permutation::from_images(std::move(images));
  }
  const auto values = parse_ints(text, 0);
  if (values.empty()) throw ParseError("empty permutation", 1, 1);
  if (n != 0 && static_cast<int>(values.size()) != n) {
    throw ParseError("expected " + std::to_string(n) + " images, got " + std::to_string(values.size()), 1, 1);
  }
  try {
    return Permutation::from_one_based(values);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::string format_one_line(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.degree(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p(i) + 1);
  }
  return out;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || p(i) == i) continue;
    out += '(';
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
      seen[static_cast<std::size_t>(j)] = 1;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace caygen
