#include "multibrot/rotation_sets.hpp"

#include "multibrot/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace mbx {

namespace {

void check_degree(int d) {
  if (d < 2) fail(errc::invalid_argument, "degree must be at least 2");
}

// Index of value in sorted vector, or -1.
std::int64_t index_of(const std::vector<Angle>& sorted, const Angle& value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  if (it == sorted.end() || !(*it == value)) return -1;
  return it - sorted.begin();
}

}  // namespace

std::vector<std::int64_t> deployment_sequence(int d, const std::vector<Angle>& sorted_angles) {
  check_degree(d);
  std::vector<std::int64_t> s(d - 1, 0);
  for (int i = 1; i <= d - 1; ++i) {
    const Rational cutoff(i, d - 1);
    std::int64_t count = 0;
    for (const Angle& a : sorted_angles)
      if (a.rational() < cutoff) ++count;
    s[i - 1] = count;
  }
  return s;
}

RotationSet recognize(int d, std::vector<Angle> angles) {
  check_degree(d);
  if (angles.empty()) fail(errc::invalid_argument, "empty angle set");
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  const std::int64_t n = static_cast<std::int64_t>(angles.size());

  // tau_d must permute the set with a constant index shift.
  std::int64_t shift = -1;
  for (std::int64_t i = 0; i < n; ++i) {
    const Angle image = tau(d, angles[i]);
    const std::int64_t j = index_of(angles, image);
    if (j < 0)
      fail(errc::not_invariant, "tau_" + std::to_string(d) + " maps " + angles[i].str() +
                                    " to " + image.str() + ", which is not in the set");
    const std::int64_t s = (j - i % n + n) % n;
    if (shift < 0)
      shift = s;
    else if (s != shift)
      fail(errc::not_rotation_set, "invariant set is not a rotation set: index shift is not constant");
  }

  RotationSet out;
  out.d = d;
  out.angles = std::move(angles);
  out.rotation_number = Rational(shift, n);
  const BigInt q = denominator(out.rotation_number);
  out.k = static_cast<unsigned>(BigInt(n) / q);
  out.deployment = deployment_sequence(d, out.angles);
  return out;
}

RotationSet construct(int d, const Rational& rotation_number,
                      const std::vector<std::int64_t>& deployment) {
  check_degree(d);
  if (rotation_number < 0 || rotation_number >= 1)
    fail(errc::invalid_argument, "rotation number must lie in [0,1)");
  if (deployment.size() != static_cast<std::size_t>(d - 1))
    fail(errc::invalid_argument, "deployment sequence must have d-1 entries");
  for (std::size_t i = 0; i < deployment.size(); ++i) {
    if (deployment[i] < 0 || (i > 0 && deployment[i] < deployment[i - 1]))
      fail(errc::invalid_argument, "deployment sequence must be non-decreasing and non-negative");
  }
  const std::int64_t n = deployment.back();
  if (n <= 0) fail(errc::invalid_argument, "deployment must end in the number of angles (>= 1)");

  const BigInt p_big = numerator(rotation_number);
  const BigInt q_big = denominator(rotation_number);
  if (BigInt(n) % q_big != 0)
    fail(errc::unrealizable, "angle count " + std::to_string(n) + " is not a multiple of the rotation period");
  const std::int64_t q = q_big.convert_to<std::int64_t>();
  const std::int64_t p = p_big.convert_to<std::int64_t>();
  const std::int64_t k = n / q;
  if (k < 1 || k > d - 1)
    fail(errc::unrealizable, "cycle count k = " + std::to_string(k) + " outside 1..d-1");

  // Goldberg's realizability criterion: every class mod k must be hit by some s_j.
  std::vector<bool> hit(k, false);
  for (std::int64_t s : deployment) hit[((s % k) + k) % k] = true;
  if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }))
    fail(errc::unrealizable, "deployment sequence misses a residue class modulo k");

  const std::int64_t m = k * p;

  // Window of index j: number of partition points i/(d-1) at or below theta_j,
  // read off from the deployment sequence.
  std::vector<int> window(n);
  for (std::int64_t j = 0; j < n; ++j) {
    int w = 0;
    for (std::int64_t s : deployment)
      if (s <= j) ++w;
    window[j] = w;
  }

  // Window runs [lo, hi). Within a run the digit is window or window+1 with a
  // single 0->1 cut; the cut is forced at the index-wrap of j -> j+m when the
  // wrap falls strictly inside the run.
  struct Run {
    std::int64_t lo, hi;
    std::int64_t forced_cut;  // -1 when free
  };
  std::vector<Run> runs;
  const std::int64_t wrap = (m % n + n) % n == 0 ? -1 : n - (m % n);
  for (std::int64_t lo = 0; lo < n;) {
    std::int64_t hi = lo;
    while (hi < n && window[hi] == window[lo]) ++hi;
    Run run{lo, hi, -1};
    if (wrap > lo && wrap < hi) run.forced_cut = wrap;
    runs.push_back(run);
    lo = hi;
  }

  const BigInt denom = big_pow(d, static_cast<unsigned>(q)) - 1;
  std::vector<std::int64_t> cuts(runs.size());
  std::vector<std::vector<Angle>> matches;

  auto try_candidate = [&]() {
    std::vector<int> digit(n);
    for (std::size_t r = 0; r < runs.size(); ++r)
      for (std::int64_t j = runs[r].lo; j < runs[r].hi; ++j)
        digit[j] = window[j] + (j >= cuts[r] ? 1 : 0);
    // Angles from the q-periodic digit string along the index orbit j -> j+m.
    std::vector<Angle> angles(n);
    for (std::int64_t j = 0; j < n; ++j) {
      BigInt acc = 0;
      std::int64_t idx = j;
      for (std::int64_t t = 0; t < q; ++t) {
        acc = acc * d + digit[idx];
        idx = (idx + m) % n;
      }
      angles[j] = Angle(acc, denom);
    }
    for (std::int64_t j = 0; j < n; ++j) {
      if (j > 0 && !(angles[j - 1] < angles[j])) return;
      if (base_d_digits(d, angles[j], 1)[0] != digit[j]) return;
      if (!(tau(d, angles[j]) == angles[(j + m) % n])) return;
    }
    if (deployment_sequence(d, angles) != deployment) return;
    for (const auto& prev : matches)
      if (prev == angles) return;
    matches.push_back(std::move(angles));
  };

  auto enumerate = [&](auto&& self, std::size_t r) -> void {
    if (r == runs.size()) {
      try_candidate();
      return;
    }
    if (runs[r].forced_cut >= 0) {
      cuts[r] = runs[r].forced_cut;
      self(self, r + 1);
      return;
    }
    for (std::int64_t c = runs[r].lo; c <= runs[r].hi; ++c) {
      cuts[r] = c;
      self(self, r + 1);
    }
  };
  enumerate(enumerate, 0);

  if (matches.empty())
    fail(errc::unrealizable, "no rotation set realizes the requested data");
  if (matches.size() > 1)
    fail(errc::invalid_argument, "construction is ambiguous (violates uniqueness)");

  RotationSet out = recognize(d, matches.front());
  if (out.rotation_number != rotation_number)
    fail(errc::unrealizable, "constructed set has a different rotation number");
  return out;
}

std::vector<RotationSet> brute_force_enumerate(int d, unsigned q) {
  check_degree(d);
  if (q == 0) fail(errc::invalid_argument, "period must be positive");
  std::int64_t modulus = 1;
  for (unsigned i = 0; i < q; ++i) {
    modulus *= d;
    if (modulus > 1'000'000) fail(errc::budget_exceeded, "d^q exceeds the exhaustive-scan guard");
  }
  const std::int64_t Q = modulus - 1;

  std::vector<RotationSet> out;
  if (Q == 0) {
    out.push_back(recognize(d, {Angle(0, 1)}));
    return out;
  }

  // tau_d is a bijection on Z/Q (gcd(d, Q) = 1), so cycles partition it.
  std::vector<char> seen(Q, 0);
  std::map<Rational, std::vector<std::vector<std::int64_t>>> groups;  // reduced rot -> cycles
  for (std::int64_t a = 0; a < Q; ++a) {
    if (seen[a]) continue;
    std::vector<std::int64_t> cycle;
    std::int64_t x = a;
    do {
      seen[x] = 1;
      cycle.push_back(x);
      x = (x * d) % Q;
    } while (x != a);
    std::sort(cycle.begin(), cycle.end());
    // Single-cycle rotation check: constant index shift.
    const std::int64_t len = static_cast<std::int64_t>(cycle.size());
    std::int64_t shift = -1;
    bool ok = true;
    for (std::int64_t i = 0; i < len && ok; ++i) {
      const std::int64_t image = (cycle[i] * d) % Q;
      const auto it = std::lower_bound(cycle.begin(), cycle.end(), image);
      if (it == cycle.end() || *it != image) {
        ok = false;
        break;
      }
      const std::int64_t s = ((it - cycle.begin()) - i + len) % len;
      if (shift < 0)
        shift = s;
      else if (s != shift)
        ok = false;
    }
    if (ok) groups[Rational(shift, len)].push_back(std::move(cycle));
  }

  // Unions of up to d-1 compatible cycles.
  const BigInt denom = Q;
  for (const auto& [rot, cycles] : groups) {
    const std::size_t g = cycles.size();
    std::vector<std::size_t> pick;
    auto emit = [&]() {
      std::vector<std::int64_t> merged;
      for (std::size_t idx : pick)
        merged.insert(merged.end(), cycles[idx].begin(), cycles[idx].end());
      std::sort(merged.begin(), merged.end());
      const std::int64_t len = static_cast<std::int64_t>(merged.size());
      std::int64_t shift = -1;
      for (std::int64_t i = 0; i < len; ++i) {
        const std::int64_t image = (merged[i] * d) % Q;
        const auto it = std::lower_bound(merged.begin(), merged.end(), image);
        const std::int64_t s = ((it - merged.begin()) - i + len) % len;
        if (shift < 0)
          shift = s;
        else if (s != shift)
          return;
      }
      std::vector<Angle> angles;
      angles.reserve(merged.size());
      for (std::int64_t v : merged) angles.emplace_back(BigInt(v), denom);
      out.push_back(recognize(d, std::move(angles)));
    };
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (!pick.empty()) emit();
      if (pick.size() == static_cast<std::size_t>(d - 1)) return;
      for (std::size_t i = from; i < g; ++i) {
        pick.push_back(i);
        self(self, i + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }

  std::sort(out.begin(), out.end(), [](const RotationSet& a, const RotationSet& b) {
    if (a.angles.size() != b.angles.size()) return a.angles.size() < b.angles.size();
    return std::lexicographical_compare(a.angles.begin(), a.angles.end(), b.angles.begin(),
                                        b.angles.end());
  });
  return out;
}

std::vector<RotationSet> prop35_family(int d, unsigned n) {
  check_degree(d);
  if (n < 2) fail(errc::invalid_argument, "prop35_family requires n >= 2");
  std::vector<RotationSet> out;
  for (int zeros = 0; zeros <= d - 2; ++zeros) {
    std::vector<std::int64_t> deployment(d - 1);
    for (int i = 0; i < d - 1; ++i) deployment[i] = i < zeros ? 0 : static_cast<std::int64_t>(n);
    out.push_back(construct(d, Rational(1, n), deployment));
  }
  return out;
}

}  // namespace mbx
