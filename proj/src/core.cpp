#include "fpt/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace fpt {

BudgetExceeded::BudgetExceeded(std::uint64_t required_, std::uint64_t allowed_)
    : std::runtime_error("lattice budget exceeded: need " + std::to_string(required_) +
                         " sets, budget allows " + std::to_string(allowed_)),
      required(required_),
      allowed(allowed_) {}

Space::Space(std::vector<std::string> labels, int denom) {
  if (labels.empty()) throw std::invalid_argument("universe must be non-empty");
  if (denom < 1) throw std::invalid_argument("denominator must be >= 1");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (l.empty()) throw std::invalid_argument("universe labels must be non-empty");
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate universe label: " + l);
  }
  rep_ = std::make_shared<const Rep>(Rep{std::move(labels), denom});
}

int Space::index_of(std::string_view label) const noexcept {
  for (std::size_t i = 0; i < rep_->labels.size(); ++i)
    if (rep_->labels[i] == label) return static_cast<int>(i);
  return -1;
}

std::uint64_t Space::lattice_size() const noexcept {
  std::uint64_t total = 1;
  const auto base = static_cast<std::uint64_t>(denom()) + 1;
  for (int i = 0; i < size(); ++i) {
    if (total > UINT64_MAX / base) return UINT64_MAX;
    total *= base;
  }
  return total;
}

bool Space::operator==(const Space& other) const noexcept {
  if (rep_ == other.rep_) return true;
  return rep_->denom == other.rep_->denom && rep_->labels == other.rep_->labels;
}

GridValue::GridValue(int num_, int den_) : num(num_), den(den_) {
  if (den < 1) throw std::invalid_argument("grid denominator must be >= 1");
  if (num < 0 || num > den) throw std::invalid_argument("grid value out of [0, 1]");
}

std::string GridValue::str() const { return std::to_string(num) + "/" + std::to_string(den); }

FuzzySet::FuzzySet(Space space, std::vector<int> numerators)
    : space_(std::move(space)), vals_(std::move(numerators)) {
  if (static_cast<int>(vals_.size()) != space_.size())
    throw std::invalid_argument("membership vector length does not match universe size");
  for (int v : vals_)
    if (v < 0 || v > space_.denom())
      throw std::invalid_argument("membership numerator out of [0, k]");
}

FuzzySet FuzzySet::zero(const Space& s) { return constant(s, 0); }
FuzzySet FuzzySet::one(const Space& s) { return constant(s, s.denom()); }

FuzzySet FuzzySet::constant(const Space& s, int numerator) {
  return FuzzySet(s, std::vector<int>(static_cast<std::size_t>(s.size()), numerator));
}

FuzzySet FuzzySet::point(const Space& s, FuzzyPoint p) {
  if (p.elem < 0 || p.elem >= s.size()) throw std::invalid_argument("fuzzy point support out of range");
  if (p.t < 1 || p.t > s.denom()) throw std::invalid_argument("fuzzy point value must be in (0, 1]");
  std::vector<int> v(static_cast<std::size_t>(s.size()), 0);
  v[static_cast<std::size_t>(p.elem)] = p.t;
  return FuzzySet(s, std::move(v));
}

bool FuzzySet::operator==(const FuzzySet& other) const {
  return space_ == other.space_ && vals_ == other.vals_;
}

std::strong_ordering FuzzySet::operator<=>(const FuzzySet& other) const {
  return vals_ <=> other.vals_;
}

std::string FuzzySet::str() const {
  std::string out;
  for (std::size_t i = 0; i < vals_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vals_[i]);
  }
  return out;
}

void require_same_space(const Space& a, const Space& b) {
  if (a != b) throw std::invalid_argument("operands live on different spaces");
}

void require_same_space(const FuzzySet& a, const FuzzySet& b) {
  require_same_space(a.space(), b.space());
}

namespace {

template <typename Fn>
FuzzySet zip(const FuzzySet& a, const FuzzySet& b, Fn&& fn) {
  require_same_space(a, b);
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] = fn(a[i], b[i]);
  return FuzzySet(a.space(), std::move(out));
}

}  // namespace

FuzzySet complement(const FuzzySet& a) {
  const int k = a.space().denom();
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] = k - a[i];
  return FuzzySet(a.space(), std::move(out));
}

FuzzySet meet(const FuzzySet& a, const FuzzySet& b) {
  return zip(a, b, [](int x, int y) { return std::min(x, y); });
}

FuzzySet join(const FuzzySet& a, const FuzzySet& b) {
  return zip(a, b, [](int x, int y) { return std::max(x, y); });
}

FuzzySet oplus(const FuzzySet& a, const FuzzySet& b) {
  const int k = a.space().denom();
  return zip(a, b, [k](int x, int y) { return std::min(x + y, k); });
}

FuzzySet odot(const FuzzySet& a, const FuzzySet& b) {
  const int k = a.space().denom();
  return zip(a, b, [k](int x, int y) { return std::max(x + y - k, 0); });
}

FuzzySet bounded_sum(const FuzzySet& a, const FuzzySet& b) { return oplus(a, b); }

FuzzySet meet_all(const Space& s, std::span<const FuzzySet> sets) {
  FuzzySet acc = FuzzySet::one(s);
  for (const auto& x : sets) acc = meet(acc, x);
  return acc;
}

FuzzySet join_all(const Space& s, std::span<const FuzzySet> sets) {
  FuzzySet acc = FuzzySet::zero(s);
  for (const auto& x : sets) acc = join(acc, x);
  return acc;
}

FuzzySet trunc_diff(const FuzzySet& a, const FuzzySet& b) {
  return zip(a, b, [](int x, int y) { return x > y ? x - y : 0; });
}

bool leq(const FuzzySet& a, const FuzzySet& b) {
  require_same_space(a, b);
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool is_zero(const FuzzySet& a) {
  for (int i = 0; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

bool is_one(const FuzzySet& a) {
  const int k = a.space().denom();
  for (int i = 0; i < a.size(); ++i)
    if (a[i] != k) return false;
  return true;
}

bool point_in(FuzzyPoint p, const FuzzySet& lambda) {
  if (p.elem < 0 || p.elem >= lambda.size()) throw std::invalid_argument("fuzzy point support out of range");
  return p.t <= lambda[p.elem];
}

bool quasi_coincident(FuzzyPoint p, const FuzzySet& lambda) {
  if (p.elem < 0 || p.elem >= lambda.size()) throw std::invalid_argument("fuzzy point support out of range");
  return p.t + lambda[p.elem] > lambda.space().denom();
}

bool quasi_coincident(const FuzzySet& a, const FuzzySet& b) {
  require_same_space(a, b);
  const int k = a.space().denom();
  for (int i = 0; i < a.size(); ++i)
    if (a[i] + b[i] > k) return true;
  return false;
}

std::uint64_t rank_of(const FuzzySet& a) {
  const auto base = static_cast<std::uint64_t>(a.space().denom()) + 1;
  std::uint64_t r = 0;
  for (int i = 0; i < a.size(); ++i) r = r * base + static_cast<std::uint64_t>(a[i]);
  return r;
}

FuzzySet set_at_rank(const Space& s, std::uint64_t rank) {
  const auto base = static_cast<std::uint64_t>(s.denom()) + 1;
  std::vector<int> v(static_cast<std::size_t>(s.size()));
  for (int i = s.size() - 1; i >= 0; --i) {
    v[static_cast<std::size_t>(i)] = static_cast<int>(rank % base);
    rank /= base;
  }
  if (rank != 0) throw std::invalid_argument("rank out of range for this lattice");
  return FuzzySet(s, std::move(v));
}

LatticeStream::LatticeStream(Space space, Budget budget)
    : space_(std::move(space)), count_(space_.lattice_size()) {
  if (count_ > budget.max_sets) throw BudgetExceeded(count_, budget.max_sets);
}

FuzzySet LatticeStream::next() {
  if (done()) throw std::logic_error("lattice stream exhausted");
  return set_at_rank(space_, next_++);
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace fpt
