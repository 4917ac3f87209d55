#include "polyfrenet/sweep.hpp"

#include "polyfrenet/classify.hpp"
#include "polyfrenet/tension.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace polyfrenet {

namespace {

constexpr std::size_t kMismatchCap = 20;

struct Grid {
  std::vector<Rational> values;    // actual squared curvatures
  std::vector<std::int64_t> ints;  // values / step
  Rational step;
};

Grid make_grid(const Rational& step, const Rational& max) {
  if (sgn(step) <= 0 || sgn(max) <= 0) throw std::invalid_argument("sweep: grid step and max must be positive");
  Rational count = max / step;
  if (count.get_den() != 1) throw std::invalid_argument("sweep: grid max must be a multiple of the step");
  Grid g;
  g.step = step;
  const long n = count.get_num().get_si();
  for (long j = 1; j <= n; ++j) {
    g.values.push_back(step * j);
    g.ints.push_back(j);
  }
  return g;
}

// c / step as an integer when possible.
std::optional<std::int64_t> scaled_c(const Rational& c, const Rational& step) {
  Rational q = c / step;
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
  return q.get_num().get_si();
}

template <class S>
bool vanishes_at(const SpaceFormTension<S>& split, const S& c) {
  for (int i = 0; i < split.free.size(); ++i) {
    if (is_zero(split.gram[static_cast<std::size_t>(i)])) continue;
    if (!is_zero(split.free[i] + c * split.curved[i])) return false;
  }
  return true;
}

// Oracle verdict for one curvature point and one c, integer path first.
struct OracleCell {
  std::optional<SpaceFormTension<CheckedInt>> ints;
  std::optional<SpaceFormTension<Rational>> exact;
};

OracleCell prepare(const std::vector<int>& eps, const std::vector<std::int64_t>& ints,
                   const std::vector<Rational>& values, int r, std::size_t& fallbacks) {
  OracleCell cell;
  try {
    std::vector<CheckedInt> k(ints.begin(), ints.end());
    cell.ints = space_form_tension_split(scaled_frame<CheckedInt>(eps, k), r);
  } catch (const std::overflow_error&) {
    ++fallbacks;
    cell.exact = space_form_tension_split(scaled_frame<Rational>(eps, values), r);
  }
  return cell;
}

bool oracle_vanishes(OracleCell& cell, const std::vector<int>& eps, const std::vector<Rational>& values, int r,
                     const Rational& c, const std::optional<std::int64_t>& c_int, std::size_t& fallbacks) {
  if (cell.ints && c_int) {
    try {
      return vanishes_at(*cell.ints, CheckedInt(*c_int));
    } catch (const std::overflow_error&) {
      ++fallbacks;
    }
  }
  if (!cell.exact) cell.exact = space_form_tension_split(scaled_frame<Rational>(eps, values), r);
  return vanishes_at(*cell.exact, c);
}

struct TaskResult {
  std::vector<SweepPoint> points;  // only filled when a sink is attached
  SweepSummary summary;
};

void tally(TaskResult& out, SweepPoint&& p, bool keep) {
  auto& s = out.summary;
  ++s.points;
  if (p.classifier == p.oracle)
    ++s.agreements;
  else if (s.mismatches.size() < kMismatchCap)
    s.mismatches.push_back(p);
  if (p.classifier) ++s.classifier_feasible;
  if (p.oracle) ++s.oracle_zero;
  if (keep) out.points.push_back(std::move(p));
}

TaskResult sweep_task(int n, const std::vector<int>& eps, int r, const SweepSpec& spec, const Grid& grid,
                      bool keep) {
  TaskResult out;
  std::size_t fallbacks = 0;
  const std::size_t J = grid.values.size();

  std::vector<OracleCell> cells;
  if (n == 2) {
    for (std::size_t j = 0; j < J; ++j) cells.push_back(prepare(eps, {grid.ints[j]}, {grid.values[j]}, r, fallbacks));
  } else {
    for (std::size_t j = 0; j < J; ++j)
      for (std::size_t l = 0; l < J; ++l)
        cells.push_back(prepare(eps, {grid.ints[j], grid.ints[l]}, {grid.values[j], grid.values[l]}, r, fallbacks));
  }

  for (const auto& c : spec.cs) {
    const auto c_int = scaled_c(c, grid.step);
    if (n == 2) {
      const auto cls = classify_2frenet(c, eps[0], eps[1], r, spec.surface);
      for (std::size_t j = 0; j < J; ++j) {
        SweepPoint p{eps, r, c, {grid.values[j]}, false, false};
        const QuadraticSurd k(grid.values[j]);
        for (const auto& s : cls.solutions)
          if (!s.degenerate && compare(*s.find("kappa^2"), k) == 0) p.classifier = true;
        p.oracle = oracle_vanishes(cells[j], eps, p.kappa_sq, r, c, c_int, fallbacks);
        tally(out, std::move(p), keep);
      }
    } else {
      for (std::size_t j = 0; j < J; ++j) {
        const auto cls = classify_3frenet(c, eps[0], eps[1], eps[2], r, grid.values[j]);
        for (std::size_t l = 0; l < J; ++l) {
          SweepPoint p{eps, r, c, {grid.values[j], grid.values[l]}, false, false};
          const QuadraticSurd t(grid.values[l]);
          for (const auto& s : cls.solutions)
            if (!s.degenerate && compare(*s.find("tau^2"), t) == 0) p.classifier = true;
          p.oracle = oracle_vanishes(cells[j * J + l], eps, p.kappa_sq, r, c, c_int, fallbacks);
          tally(out, std::move(p), keep);
        }
      }
    }
  }
  out.summary.overflow_fallbacks = fallbacks;
  return out;
}

void merge(SweepSummary& into, const SweepSummary& from) {
  into.points += from.points;
  into.agreements += from.agreements;
  into.classifier_feasible += from.classifier_feasible;
  into.oracle_zero += from.oracle_zero;
  into.overflow_fallbacks += from.overflow_fallbacks;
  for (const auto& m : from.mismatches)
    if (into.mismatches.size() < kMismatchCap) into.mismatches.push_back(m);
}

std::vector<std::vector<int>> signatures_for(int n, const std::vector<std::vector<int>>& given, bool surface) {
  std::vector<std::vector<int>> out;
  for (auto& e : given.empty() ? all_signatures(n) : given) {
    if (static_cast<int>(e.size()) != n) continue;
    if (surface && n == 2 && e[0] * e[1] != -1) continue;
    out.push_back(e);
  }
  return out;
}

// Runs tasks on a few workers; results are handed to `collect` strictly in task order.
template <class Task, class Collect>
void run_ordered(std::size_t count, Task task, Collect collect) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) collect(task(i));
    return;
  }
  std::vector<std::future<decltype(task(0))>> futures;
  std::size_t next = 0;
  auto launch = [&] {
    if (next < count) {
      const std::size_t i = next++;
      futures.push_back(std::async(std::launch::async, task, i));
    }
  };
  for (std::size_t w = 0; w < workers; ++w) launch();
  for (std::size_t i = 0; i < count; ++i) {
    auto result = futures[i].get();
    launch();
    collect(std::move(result));
  }
}

}  // namespace

GridTooLarge::GridTooLarge(std::size_t points)
    : std::runtime_error("sweep: grid has " + std::to_string(points) + " points, above the configured cap"),
      points_(points) {}

std::vector<std::vector<int>> all_signatures(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = (mask >> (n - 1 - i)) & 1 ? 1 : -1;
    out.push_back(e);
  }
  return out;
}

std::size_t sweep_point_count(const SweepSpec& spec) {
  const auto grid = make_grid(spec.step, spec.max);
  std::size_t total = 0;
  for (int n : spec.ns) {
    if (n != 2 && n != 3) throw std::invalid_argument("sweep: helix sweeps cover n = 2 and n = 3");
    const std::size_t per = n == 2 ? grid.values.size() : grid.values.size() * grid.values.size();
    total += signatures_for(n, spec.signatures, spec.surface).size() * spec.rs.size() * spec.cs.size() * per;
  }
  return total;
}

SweepSummary run_helix_sweep(const SweepSpec& spec, const std::function<void(const SweepPoint&)>& sink) {
  const std::size_t total = sweep_point_count(spec);
  if (total > spec.max_points) throw GridTooLarge(total);
  for (int r : spec.rs)
    if (r < 2) throw std::invalid_argument("sweep: r must be at least 2");
  const auto grid = make_grid(spec.step, spec.max);

  struct Job {
    int n;
    std::vector<int> eps;
    int r;
  };
  std::vector<Job> jobs;
  for (int n : spec.ns)
    for (const auto& e : signatures_for(n, spec.signatures, spec.surface))
      for (int r : spec.rs) jobs.push_back({n, e, r});

  const bool keep = static_cast<bool>(sink);
  SweepSummary summary;
  run_ordered(
      jobs.size(), [&](std::size_t i) { return sweep_task(jobs[i].n, jobs[i].eps, jobs[i].r, spec, grid, keep); },
      [&](TaskResult&& res) {
        merge(summary, res.summary);
        if (sink)
          for (const auto& p : res.points) sink(p);
      });
  return summary;
}

SweepSummary run_biharmonic_sweep(const BiharmonicSweepSpec& spec) {
  if (spec.n != 4 && spec.n != 5) throw std::invalid_argument("biharmonic sweep: n must be 4 or 5");
  const auto grid = make_grid(spec.step, spec.max);
  const std::size_t J = grid.values.size();
  std::vector<std::vector<int>> sigs;
  for (auto& e : spec.signatures.empty() ? all_signatures(spec.n) : spec.signatures)
    if (static_cast<int>(e.size()) == spec.n) sigs.push_back(e);

  std::vector<Rational> lasts;
  if (spec.n == 5) {
    if (spec.last_samples.empty()) throw std::invalid_argument("biharmonic sweep: n = 5 needs k_4 samples");
    lasts = spec.last_samples;
  } else {
    lasts.push_back(0);  // placeholder, unused
  }

  SweepSummary summary;
  run_ordered(
      sigs.size(),
      [&](std::size_t si) {
        TaskResult out;
        std::size_t fallbacks = 0;
        const auto& eps = sigs[si];
        const Signature sig{eps, 1, spec.n};
        std::vector<bool> classifier;
        std::vector<std::optional<std::int64_t>> c_ints;
        for (const auto& c : spec.cs) {
          classifier.push_back(classify_nfrenet_biharmonic(sig, c, true).feasible());
          c_ints.push_back(scaled_c(c, grid.step));
        }
        for (const auto& last : lasts) {
          // the integer path needs the extra curvature on the same scale
          std::optional<std::int64_t> last_int;
          if (spec.n == 5) {
            Rational q = last / grid.step;
            if (q.get_den() == 1) last_int = q.get_num().get_si();
          }
          for (std::size_t a = 0; a < J; ++a)
            for (std::size_t b = 0; b < J; ++b)
              for (std::size_t d = 0; d < J; ++d) {
                std::vector<Rational> values{grid.values[a], grid.values[b], grid.values[d]};
                std::vector<std::int64_t> ints{grid.ints[a], grid.ints[b], grid.ints[d]};
                if (spec.n == 5) values.push_back(last);
                OracleCell cell;
                if (spec.n == 4 || last_int) {
                  if (spec.n == 5) ints.push_back(*last_int);
                  cell = prepare(eps, ints, values, 2, fallbacks);
                }
                for (std::size_t ci = 0; ci < spec.cs.size(); ++ci) {
                  SweepPoint p{eps, 2, spec.cs[ci], values, classifier[ci], false};
                  p.oracle = oracle_vanishes(cell, eps, values, 2, spec.cs[ci], c_ints[ci], fallbacks);
                  tally(out, std::move(p), false);
                }
              }
        }
        out.summary.overflow_fallbacks = fallbacks;
        return out;
      },
      [&](TaskResult&& res) { merge(summary, res.summary); });
  return summary;
}

}  // namespace polyfrenet
