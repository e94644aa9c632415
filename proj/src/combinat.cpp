#include "hesscell/combinat.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace hesscell {

namespace {

std::vector<int> parse_int_list(std::string_view text, bool allow_digit_string) {
  std::vector<int> out;
  if (text.empty()) throw InvalidInput("empty integer list");
  const bool has_comma = text.find(',') != std::string_view::npos;
  if (!has_comma && allow_digit_string && text.size() > 1) {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw InvalidInput("invalid digit in '" + std::string(text) + "'");
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(pos, end - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw InvalidInput("malformed integer '" + std::string(field) + "'");
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

std::string join_ints(const std::vector<int>& v, bool compact) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0 && !compact) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v])
      throw InvalidInput("not a permutation of [" + std::to_string(n) + "]: " +
                         join_ints(images_, false));
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  for (int j = 0; j < n; ++j) v[j] = n - j;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int j = 1; j <= size(); ++j) inv[(*this)(j)-1] = j;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& u) const {
  if (u.size() != size())
    throw InvalidInput("cannot compose permutations of sizes " + std::to_string(size()) +
                       " and " + std::to_string(u.size()));
  std::vector<int> out(images_.size());
  for (int j = 1; j <= size(); ++j) out[j - 1] = (*this)(u(j));
  return Permutation(std::move(out));
}

int Permutation::length() const {
  int inv = 0;
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (images_[a] > images_[b]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (int j = 1; j <= size(); ++j)
    if ((*this)(j) != j) return false;
  return true;
}

std::string Permutation::str() const { return join_ints(images_, size() <= 9); }

Permutation Permutation::parse(std::string_view text) {
  return Permutation(parse_int_list(text, true));
}

Permutation v_of_w(const Permutation& w) { return Permutation::longest(w.size()).compose(w); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

HessenbergFunction::HessenbergFunction(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n < 1) throw InvalidInput("Hessenberg function must have n >= 1");
  indecomposable_ = true;
  for (int i = 1; i <= n; ++i) {
    const int hi = (*this)(i);
    if (hi < i || hi > n)
      throw InvalidInput("h(" + std::to_string(i) + ") = " + std::to_string(hi) +
                         " outside [i, n] in " + join_ints(values_, false));
    if (i < n && (*this)(i + 1) < hi)
      throw InvalidInput("Hessenberg function not nondecreasing: " + join_ints(values_, false));
    if (i < n && hi < i + 1) indecomposable_ = false;
  }
}

HessenbergFunction HessenbergFunction::full(int n) {
  return HessenbergFunction(std::vector<int>(n, n));
}

HessenbergFunction HessenbergFunction::minimal_indecomposable(int n) {
  std::vector<int> v(n);
  for (int i = 1; i <= n; ++i) v[i - 1] = std::min(i + 1, n);
  return HessenbergFunction(std::move(v));
}

bool HessenbergFunction::pointwise_le(const HessenbergFunction& other) const {
  if (other.size() != size()) return false;
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) > other(i)) return false;
  return true;
}

std::string HessenbergFunction::str() const { return join_ints(values_, false); }

HessenbergFunction HessenbergFunction::parse(std::string_view text) {
  return HessenbergFunction(parse_int_list(text, false));
}

LambdaPartition lambda_h(const HessenbergFunction& h) {
  LambdaPartition out;
  const int n = h.size();
  for (int i = 1; i <= n; ++i) {
    out.parts.push_back(n - h(i));
    out.size += n - h(i);
  }
  return out;
}

std::vector<HessenbergFunction> enumerate_hessenberg(int n, bool indecomposable_only) {
  if (n < 1) throw InvalidInput("n must be >= 1");
  std::vector<HessenbergFunction> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int i, int lower) -> void {
    if (i > n) {
      HessenbergFunction h(cur);
      if (!indecomposable_only || h.indecomposable()) out.push_back(std::move(h));
      return;
    }
    for (int v = std::max(lower, i); v <= n; ++v) {
      cur.push_back(v);
      self(self, i + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 1, 1);
  return out;
}

bool is_fixed_point(const Permutation& w, const HessenbergFunction& h) {
  if (w.size() != h.size()) throw InvalidInput("permutation and Hessenberg function sizes differ");
  const Permutation winv = w.inverse();
  for (int j = 1; j <= w.size(); ++j) {
    if (w(j) == 1) continue;
    if (winv(w(j) - 1) > h(j)) return false;
  }
  return true;
}

std::vector<Permutation> fixed_points(const HessenbergFunction& h) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(h.size()))
    if (is_fixed_point(w, h)) out.push_back(std::move(w));
  return out;
}

}  // namespace hesscell
