#include "pacarena/tournament.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <set>
#include <thread>

namespace pacarena {

PairStats compute_stats(const std::string& pacman, const std::string& ghosts,
                        const std::vector<MatchResult>& results) {
  PairStats st;
  st.pacman = pacman;
  st.ghosts = ghosts;
  st.n = static_cast<int>(results.size());
  if (st.n == 0) return st;
  double sum = 0.0;
  st.min_score = st.max_score = results[0].score;
  for (const auto& r : results) {
    sum += r.score;
    st.min_score = std::min(st.min_score, static_cast<double>(r.score));
    st.max_score = std::max(st.max_score, static_cast<double>(r.score));
  }
  st.mean = sum / st.n;
  if (st.n == 1) {
    st.se = 0.0;
    st.insufficient_n = true;
    return st;
  }
  double ss = 0.0;
  for (const auto& r : results) ss += (r.score - st.mean) * (r.score - st.mean);
  const double sd = std::sqrt(ss / (st.n - 1));
  st.se = sd / std::sqrt(static_cast<double>(st.n));
  return st;
}

SeriesOutput run_series(const std::string& pacman, const std::string& ghosts,
                        const std::vector<MazeGraph>& mazes, const RuleConfig& config,
                        const SeriesOptions& opt) {
  if (opt.games < 1) throw ConfigError("run_series: games must be >= 1");
  // Validate names up front so the error surfaces before any thread spawns.
  make_pacman_controller(pacman, ControllerParams::from_config(config));
  make_ghost_team(ghosts, ControllerParams::from_config(config));

  const std::vector<VisibilityIndex> vis = build_visibility(mazes, config.po);

  std::vector<MatchResult> results(static_cast<size_t>(opt.games));
  std::atomic<int> next{0};
  auto work = [&]() {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= opt.games) return;
      MatchSpec spec;
      spec.mazes = &mazes;
      spec.config = config;
      spec.pacman_name = pacman;
      spec.ghosts_name = ghosts;
      spec.seed = opt.base_seed + static_cast<std::uint64_t>(i);
      spec.enforce_budget = opt.enforce_budget;
      spec.visibility = &vis;
      if (opt.sink_factory) spec.sink = opt.sink_factory(spec.seed);
      results[static_cast<size_t>(i)] = play_match(spec);
    }
  };

  const int workers = std::max(1, std::min(opt.workers, opt.games));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SeriesOutput out;
  out.stats = compute_stats(pacman, ghosts, results);
  out.results = std::move(results);
  return out;
}

double RoundRobinResult::pacman_mean(size_t p) const {
  double sum = 0.0;
  long n = 0;
  for (size_t t = 0; t < teams.size(); ++t) {
    const PairStats& c = cell(p, t);
    sum += c.mean * c.n;
    n += c.n;
  }
  return n ? sum / static_cast<double>(n) : 0.0;
}

double RoundRobinResult::team_conceded_mean(size_t t) const {
  double sum = 0.0;
  long n = 0;
  for (size_t p = 0; p < pacmen.size(); ++p) {
    const PairStats& c = cell(p, t);
    sum += c.mean * c.n;
    n += c.n;
  }
  return n ? sum / static_cast<double>(n) : 0.0;
}

std::vector<std::string> RoundRobinResult::pacman_ranking() const {
  std::vector<size_t> idx(pacmen.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    const double ma = pacman_mean(a), mb = pacman_mean(b);
    if (ma != mb) return ma > mb;
    return pacmen[a] < pacmen[b];  // name tie-break keeps ranking registration-order-free
  });
  std::vector<std::string> out;
  for (size_t i : idx) out.push_back(pacmen[i]);
  return out;
}

std::vector<std::string> RoundRobinResult::team_ranking() const {
  std::vector<size_t> idx(teams.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    const double ma = team_conceded_mean(a), mb = team_conceded_mean(b);
    if (ma != mb) return ma < mb;
    return teams[a] < teams[b];
  });
  std::vector<std::string> out;
  for (size_t i : idx) out.push_back(teams[i]);
  return out;
}

RoundRobinResult round_robin(const std::vector<std::string>& pacmen,
                             const std::vector<std::string>& teams,
                             const std::vector<MazeGraph>& mazes, const RuleConfig& config,
                             const SeriesOptions& opt) {
  if (pacmen.empty() || teams.empty())
    throw ConfigError("round_robin: both entrant lists must be non-empty");
  if (std::set<std::string>(pacmen.begin(), pacmen.end()).size() != pacmen.size())
    throw ConfigError("round_robin: duplicate pacman entrant");
  if (std::set<std::string>(teams.begin(), teams.end()).size() != teams.size())
    throw ConfigError("round_robin: duplicate ghost-team entrant");

  RoundRobinResult rr;
  rr.pacmen = pacmen;
  rr.teams = teams;
  for (const auto& p : pacmen)
    for (const auto& t : teams) rr.cells.push_back(run_series(p, t, mazes, config, opt).stats);
  return rr;
}

std::vector<PairwiseOutcome> derive_outcomes(const RoundRobinResult& rr, bool pacman_track) {
  std::vector<PairwiseOutcome> out;
  const auto& entrants = pacman_track ? rr.pacmen : rr.teams;
  const auto& opponents = pacman_track ? rr.teams : rr.pacmen;
  for (size_t a = 0; a < entrants.size(); ++a) {
    for (size_t b = a + 1; b < entrants.size(); ++b) {
      for (size_t g = 0; g < opponents.size(); ++g) {
        const PairStats& ca = pacman_track ? rr.cell(a, g) : rr.cell(g, a);
        const PairStats& cb = pacman_track ? rr.cell(b, g) : rr.cell(g, b);
        if (ca.n == 0 || cb.n == 0) continue;  // no common opponent data
        double score;
        if (ca.mean == cb.mean) {
          score = 0.5;
        } else if (pacman_track) {
          score = ca.mean > cb.mean ? 1.0 : 0.0;  // higher score is better
        } else {
          score = ca.mean < cb.mean ? 1.0 : 0.0;  // lower conceded score is better
        }
        out.push_back({entrants[a], entrants[b], score});
      }
    }
  }
  return out;
}

std::map<std::string, Rating> rate_entrants(const RoundRobinResult& rr, bool pacman_track,
                                            double tau) {
  const auto& entrants = pacman_track ? rr.pacmen : rr.teams;
  std::map<std::string, Rating> pre;
  for (const auto& e : entrants) pre[e] = Rating{};

  std::map<std::string, std::vector<GlickoOutcome>> games;
  for (const auto& o : derive_outcomes(rr, pacman_track)) {
    games[o.a].push_back({pre[o.b], o.score_for_a});
    games[o.b].push_back({pre[o.a], 1.0 - o.score_for_a});
  }

  std::map<std::string, Rating> post;
  for (const auto& e : entrants) post[e] = glicko2_update(pre[e], games[e], tau);
  return post;
}

std::vector<SweepPoint> threshold_sweep(const std::vector<int>& thresholds,
                                        const std::string& opponent,
                                        const std::vector<MazeGraph>& mazes,
                                        const RuleConfig& config, const SeriesOptions& opt) {
  std::vector<SweepPoint> out;
  out.reserve(thresholds.size());
  for (int th : thresholds) {
    RuleConfig cfg = config;
    cfg.pogc_threshold = th;
    const SeriesOutput s = run_series(opponent, "POGC", mazes, cfg, opt);
    out.push_back({th, s.stats.n, s.stats.mean, s.stats.se});
  }
  return out;
}

}  // namespace pacarena
