#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wienerseq/distance_sequence.hpp"
#include "wienerseq/errors.hpp"

namespace wienerseq {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class IndexKind {
  FSum,     // sum of f(d) over all entries
  Product,  // product of all entries
  Max,      // largest entry
};

enum class Monotonicity {
  Increasing,     // strictly increasing in every coordinate
  Decreasing,     // strictly decreasing in every coordinate
  Nondecreasing,  // weakly increasing only
};

inline std::string_view to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::Nondecreasing: return "nondecreasing";
  }
  return "?";
}

/// A distance-based index: an aggregation over the distance sequence plus
/// its declared monotonicity as a function of fixed-length sequences.
struct IndexDefinition {
  std::string name;
  IndexKind kind = IndexKind::FSum;
  std::function<double(std::uint32_t)> term;  // used by FSum only
  std::optional<double> lambda;
  Monotonicity monotonicity = Monotonicity::Increasing;

  /// "name" or "name:lambda", as accepted by parse_index.
  std::string label() const {
    if (!lambda) return name;
    std::ostringstream out;
    out << name << ':' << *lambda;
    return out.str();
  }

  bool strict() const noexcept { return monotonicity != Monotonicity::Nondecreasing; }
};

namespace indices {

inline IndexDefinition wiener() {
  return {"wiener", IndexKind::FSum, [](std::uint32_t d) { return double(d); }, std::nullopt,
          Monotonicity::Increasing};
}

inline IndexDefinition harary() {
  return {"harary", IndexKind::FSum, [](std::uint32_t d) { return 1.0 / d; }, std::nullopt,
          Monotonicity::Decreasing};
}

inline IndexDefinition hyper_wiener() {
  // (d^2 + d) / 2
  return {"hyper_wiener", IndexKind::FSum,
          [](std::uint32_t d) { return (double(d) * d + d) / 2.0; }, std::nullopt,
          Monotonicity::Increasing};
}

inline IndexDefinition variable_wiener(double lambda) {
  if (lambda == 0.0) throw DomainError("variable_wiener requires lambda != 0");
  return {"variable_wiener", IndexKind::FSum,
          [lambda](std::uint32_t d) { return std::pow(double(d), lambda); }, lambda,
          lambda > 0 ? Monotonicity::Increasing : Monotonicity::Decreasing};
}

inline IndexDefinition gen_hyper_wiener(double lambda) {
  if (lambda == 0.0) throw DomainError("gen_hyper_wiener requires lambda != 0");
  return {"gen_hyper_wiener", IndexKind::FSum,
          [lambda](std::uint32_t d) {
            const double p = std::pow(double(d), lambda);
            return (p + p * p) / 2.0;
          },
          lambda, lambda > 0 ? Monotonicity::Increasing : Monotonicity::Decreasing};
}

inline IndexDefinition tsz() {
  return {"tsz", IndexKind::FSum,
          [](std::uint32_t d) {
            const double x = d;
            return (x + x * x / 2.0 + x * x * x / 6.0) / 3.0;
          },
          std::nullopt, Monotonicity::Increasing};
}

inline IndexDefinition mult_wiener() {
  return {"mult_wiener", IndexKind::Product, nullptr, std::nullopt, Monotonicity::Increasing};
}

inline IndexDefinition log_mult_wiener() {
  return {"log_mult_wiener", IndexKind::FSum, [](std::uint32_t d) { return std::log(double(d)); },
          std::nullopt, Monotonicity::Increasing};
}

inline IndexDefinition diameter() {
  return {"diameter", IndexKind::Max, nullptr, std::nullopt, Monotonicity::Nondecreasing};
}

/// Every built-in index; parametric families are instantiated at a few
/// representative exponents of both signs.
inline std::vector<IndexDefinition> builtins() {
  return {wiener(),
          harary(),
          hyper_wiener(),
          variable_wiener(2.0),
          variable_wiener(0.5),
          variable_wiener(-1.0),
          variable_wiener(-2.0),
          gen_hyper_wiener(2.0),
          gen_hyper_wiener(-1.0),
          tsz(),
          mult_wiener(),
          log_mult_wiener(),
          diameter()};
}

}  // namespace indices

/// Parses "wiener", "harary", "hyper_wiener", "variable_wiener:L",
/// "gen_hyper_wiener:L", "tsz", "mult_wiener", "log_mult_wiener", "diameter".
inline IndexDefinition parse_index(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string name(spec.substr(0, colon));
  std::optional<double> lambda;
  if (colon != std::string_view::npos) {
    const std::string arg(spec.substr(colon + 1));
    std::size_t used = 0;
    try {
      lambda = std::stod(arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (arg.empty() || used != arg.size() || !std::isfinite(*lambda)) {
      throw ParseError("index \"" + std::string(spec) + "\": bad lambda \"" + arg + "\"");
    }
  }
  const bool parametric = name == "variable_wiener" || name == "gen_hyper_wiener";
  if (parametric != lambda.has_value()) {
    throw ParseError(parametric ? "index \"" + name + "\" requires a lambda (name:lambda)"
                                : "index \"" + name + "\" takes no lambda");
  }
  if (name == "wiener") return indices::wiener();
  if (name == "harary") return indices::harary();
  if (name == "hyper_wiener") return indices::hyper_wiener();
  if (name == "tsz") return indices::tsz();
  if (name == "mult_wiener") return indices::mult_wiener();
  if (name == "log_mult_wiener") return indices::log_mult_wiener();
  if (name == "diameter") return indices::diameter();
  if (!parametric) throw ParseError("unknown index \"" + name + "\"");
  if (*lambda == 0.0) throw ParseError("index \"" + name + "\": lambda must be nonzero");
  if (name == "variable_wiener") return indices::variable_wiener(*lambda);
  return indices::gen_hyper_wiener(*lambda);
}

inline constexpr std::uint64_t kExactProductMaxPairs = 200;

/// Floating-point value of an index on a sequence.
inline double evaluate(const IndexDefinition& def, const DistanceSequence& s) {
  if (s.empty()) throw DomainError("cannot evaluate " + def.name + " on an empty sequence");
  switch (def.kind) {
    case IndexKind::FSum: {
      double total = 0.0;
      for (const auto& r : s.runs()) total += static_cast<double>(r.count) * def.term(r.value);
      return total;
    }
    case IndexKind::Product: {
      if (s.size() > kExactProductMaxPairs) {
        double log_sum = 0.0;
        for (const auto& r : s.runs()) log_sum += static_cast<double>(r.count) * std::log(double(r.value));
        return std::exp(log_sum);
      }
      BigInt product = 1;
      for (const auto& r : s.runs()) {
        product *= boost::multiprecision::pow(BigInt(r.value), static_cast<unsigned>(r.count));
      }
      return product.convert_to<double>();
    }
    case IndexKind::Max:
      return s.max();
  }
  return 0.0;
}

/// Exact value for the indices whose terms are rational: wiener,
/// hyper_wiener, harary, tsz, diameter, and mult_wiener up to
/// kExactProductMaxPairs entries.
inline std::optional<BigRational> exact_value(const IndexDefinition& def, const DistanceSequence& s) {
  if (s.empty()) throw DomainError("cannot evaluate " + def.name + " on an empty sequence");
  if (def.lambda) return std::nullopt;
  BigRational total = 0;
  if (def.name == "wiener") {
    for (const auto& r : s.runs()) total += BigInt(r.count) * r.value;
  } else if (def.name == "hyper_wiener") {
    for (const auto& r : s.runs()) total += BigInt(r.count) * (BigInt(r.value) * r.value + r.value) / 2;
  } else if (def.name == "harary") {
    for (const auto& r : s.runs()) total += BigRational(BigInt(r.count), BigInt(r.value));
  } else if (def.name == "tsz") {
    // (d + d^2/2 + d^3/6) / 3 = (6d + 3d^2 + d^3) / 18
    for (const auto& r : s.runs()) {
      const BigInt d = r.value;
      total += BigRational(BigInt(r.count) * (6 * d + 3 * d * d + d * d * d), BigInt(18));
    }
  } else if (def.name == "diameter") {
    total = s.max();
  } else if (def.name == "mult_wiener") {
    if (s.size() > kExactProductMaxPairs) return std::nullopt;
    BigInt product = 1;
    for (const auto& r : s.runs()) {
      product *= boost::multiprecision::pow(BigInt(r.value), static_cast<unsigned>(r.count));
    }
    total = product;
  } else {
    return std::nullopt;
  }
  return total;
}

/// "29", "28/3": integer or reduced fraction.
inline std::string to_string(const BigRational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

/// m f(1) + (C(n,2) - m) f(2): a lower bound for increasing sums (upper bound
/// for decreasing ones) over connected graphs of order n and size m, attained
/// exactly when the diameter is at most 2.
inline double order_size_lower_bound(const IndexDefinition& def, std::uint64_t n, std::uint64_t m) {
  if (def.kind != IndexKind::FSum || !def.strict()) {
    throw DomainError("order_size_lower_bound needs a strictly monotone sum index, got " + def.label());
  }
  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (n < 1 || m + 1 < n || m > pairs) {
    throw DomainError("size m=" + std::to_string(m) + " outside [n-1, n(n-1)/2] for n=" +
                      std::to_string(n));
  }
  return static_cast<double>(m) * def.term(1) + static_cast<double>(pairs - m) * def.term(2);
}

namespace detail {

inline bool approx_le(double a, double b) {
  return a <= b + 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)});
}

}  // namespace detail

/// Checks that the index respects the dominance order on the pair (a, b):
/// a <= b implies I(a) <= I(b) for increasing indices (>= for decreasing),
/// strictly when a < b and the index is strictly monotone. Vacuously true
/// for incomparable pairs.
inline bool monotone_consistency(const IndexDefinition& def, const DistanceSequence& a,
                                 const DistanceSequence& b) {
  const auto rel = compare(a, b);
  if (rel.tag == Dominance::Incomparable) return true;
  if (rel.tag == Dominance::Equal) return evaluate(def, a) == evaluate(def, b);
  // Orient so that lo < hi.
  const bool a_low = rel.tag == Dominance::Less;
  const double lo = evaluate(def, a_low ? a : b);
  const double hi = evaluate(def, a_low ? b : a);
  switch (def.monotonicity) {
    case Monotonicity::Increasing: return lo < hi;
    case Monotonicity::Decreasing: return lo > hi;
    case Monotonicity::Nondecreasing: return detail::approx_le(lo, hi);
  }
  return false;
}

}  // namespace wienerseq
