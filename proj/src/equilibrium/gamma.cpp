#include "gammakit/equilibrium/gamma.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gammakit/oligopoly/market.hpp"

namespace gammakit::equilibrium {

GammaCharacteristicFunction::GammaCharacteristicFunction(std::size_t n, SolverSettings settings,
                                                         std::vector<GammaEntry> entries)
    : n_(n), settings_(settings), entries_(std::move(entries)) {
  if (entries_.size() != (std::size_t{1} << n) - 1) {
    throw std::invalid_argument("expected one entry per nonempty coalition");
  }
}

const GammaEntry& GammaCharacteristicFunction::at(const Coalition& coalition) const {
  return entries_.at(coalition.mask() - 1);
}

std::size_t GammaCharacteristicFunction::void_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const GammaEntry& e) { return !e.value; }));
}

TuGame GammaCharacteristicFunction::game() const {
  TuGame g(n_);
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k].value) g.set(k + 1, *entries_[k].value);
  }
  return g;
}

GammaCharacteristicFunction gamma_characteristic(const OligopolySituation& s,
                                                 const SolverSettings& settings,
                                                 std::size_t jobs) {
  const std::size_t n = s.firm_count();
  if (n > kMaxPlayers) throw std::invalid_argument("gamma characteristic supports at most 12 firms");
  settings.validate();
  const std::size_t count = (std::size_t{1} << n) - 1;

  std::vector<std::optional<GammaEntry>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= count) return;
      try {
        const Coalition coalition = Coalition::from_mask(k + 1, n);
        EquilibriumResult r =
            partial_agreement_equilibrium(s, Partition::around(coalition, n), settings);
        std::optional<double> value;
        if (r.status == Status::kFound) {
          value = oligopoly::coalition_profit(s, coalition, r.profile);
        }
        slots[k] = GammaEntry{coalition, value, std::move(r)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  jobs = std::clamp<std::size_t>(jobs, 1, count);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<GammaEntry> entries;
  entries.reserve(count);
  for (auto& slot : slots) entries.push_back(std::move(*slot));
  return GammaCharacteristicFunction(n, settings, std::move(entries));
}

}  // namespace gammakit::equilibrium
