#include "loadgen/workload.hpp"

#include <numeric>
#include <stdexcept>

#include "loadgen/errors.hpp"

namespace loadgen {

long long WorkloadVector::total_size() const {
  return std::accumulate(threads.begin(), threads.end(), 0LL);
}

std::string Ratio::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Ratio Ratio::parse(const std::string& text) {
  if (text.empty()) throw ConfigError("empty ratio");
  auto slash = text.find('/');
  long long num = 0, den = 1;
  try {
    if (slash != std::string::npos) {
      num = std::stoll(text.substr(0, slash));
      den = std::stoll(text.substr(slash + 1));
    } else if (text.find('.') != std::string::npos) {
      // Decimal: scale to a fixed denominator, then reduce.
      double v = std::stod(text);
      den = 1000000000LL;
      num = static_cast<long long>(v * static_cast<double>(den) + 0.5);
    } else {
      num = std::stoll(text);
    }
  } catch (const std::exception&) {
    throw ConfigError("unparsable ratio: " + text);
  }
  if (den <= 0 || num < 0) throw ConfigError("ratio must be >= 0: " + text);
  long long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Ratio{num, den};
}

Catalog default_catalog() {
  auto tx = [](int id, std::string name,
               std::vector<std::string> chain) -> Transaction {
    return Transaction{id, std::move(name), std::move(chain)};
  };
  return {
      tx(0, "Home", {"home page"}),
      tx(1, "Sign up page", {"home page", "my account page"}),
      tx(2, "Sign up", {"home page", "my account page", "register"}),
      tx(3, "Login page", {"home page", "my account page"}),
      tx(4, "Login", {"home page", "my account page", "login"}),
      tx(5, "Search page", {"home page"}),
      tx(6, "Select product", {"home page", "select product"}),
      tx(7, "Add to cart", {"select product", "add to cart"}),
      tx(8, "Payment", {"select product", "add to cart", "checkout"}),
      tx(9, "Confirm",
         {"select product", "add to cart", "checkout", "paypal page"}),
      tx(10, "Log out", {"my account page", "logout"}),
  };
}

WorkloadVector uniform_workload(long long threads, std::size_t transactions) {
  return WorkloadVector{
      std::vector<long long>(transactions, threads)};
}

namespace {

// ceil(w * (den + num) / den) in exact integer arithmetic.
long long grow(long long w, Ratio r) {
  long long scaled = w * (r.den + r.num);
  return (scaled + r.den - 1) / r.den;
}

}  // namespace

WorkloadVector apply_action(const WorkloadVector& w, ActionId a, Ratio ratio) {
  if (a.k < 0 || static_cast<std::size_t>(a.k) >= w.threads.size())
    throw std::out_of_range("action index " + std::to_string(a.k) +
                            " out of range for " +
                            std::to_string(w.threads.size()) + " transactions");
  WorkloadVector out = w;
  out.threads[a.k] = grow(out.threads[a.k], ratio);
  return out;
}

WorkloadVector apply_to_all(const WorkloadVector& w, Ratio ratio) {
  WorkloadVector out = w;
  for (auto& t : out.threads) t = grow(t, ratio);
  return out;
}

long long load_units(const WorkloadVector& w, const Catalog& catalog) {
  if (w.threads.size() != catalog.size())
    throw std::invalid_argument("workload has " +
                                std::to_string(w.threads.size()) +
                                " components but catalog has " +
                                std::to_string(catalog.size()));
  long long units = 0;
  for (std::size_t j = 0; j < catalog.size(); ++j)
    units += w.threads[j] * catalog[j].cost();
  return units;
}

}  // namespace loadgen
