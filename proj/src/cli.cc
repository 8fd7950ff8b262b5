// Copyright 2026 The Polyblock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "polyblock/cli.h"

#include <atomic>
#include <csignal>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "polyblock/blocker.h"
#include "polyblock/counting.h"
#include "polyblock/game.h"
#include "polyblock/http_server.h"
#include "polyblock/service.h"
#include "polyblock/solver.h"
#include "polyblock/strategies.h"
#include "polyblock/triangulation.h"

namespace polyblock {
namespace {

constexpr std::uint64_t kDefaultSeed = 1;

enum class Format { kHuman, kLines, kCsv };

const std::map<std::string, Format> kFormats = {
    {"human", Format::kHuman}, {"lines", Format::kLines}, {"csv", Format::kCsv}};

// Thrown for refused inputs that parse fine (feasibility, bad edge lists).
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string Quoted(const std::string& s) { return "\"" + s + "\""; }

std::string YesNo(bool b) { return b ? "yes" : "no"; }

std::string Join(const std::vector<int>& v, const std::string& sep) {
  std::string out;
  for (std::size_t p = 0; p < v.size(); ++p) out += (p ? sep : "") + std::to_string(v[p]);
  return out;
}

// "1:1", "1:2" (double-first unless standard) or any "m:b".
GameConfig ParseBias(int n, const std::string& bias, bool standard, Player first) {
  GameConfig c;
  c.n = n;
  c.first_mover = first;
  const auto colon = bias.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(bias);
    std::size_t used = 0;
    c.maker_per_turn = std::stoi(bias.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(bias);
    c.breaker_per_turn = std::stoi(bias.substr(colon + 1), &used);
    if (used != bias.size() - colon - 1) throw std::invalid_argument(bias);
  } catch (const std::logic_error&) {
    throw UsageError("bias must look like 1:1 or 1:2, got '" + bias + "'");
  }
  c.breaker_double_first_only = c.maker_per_turn == 1 && c.breaker_per_turn == 2 && !standard;
  ValidateConfig(c);
  return c;
}

std::string BiasDescription(const GameConfig& c) {
  if (c.breaker_double_first_only) return "1:2 double-first";
  return BiasLabel(c);
}

// ------------------------------------------------------- triangulations

struct TriangulationsArgs {
  int n = 0;
  bool count_only = false;
};

int RunTriangulations(const TriangulationsArgs& a, Format f, std::ostream& out) {
  CheckPolygonSize(a.n);
  if (a.count_only) {
    const BigInt count = TriangulationCount(a.n);
    if (f == Format::kCsv) {
      out << "n,count\n" << a.n << ',' << count << '\n';
    } else {
      out << count << '\n';
    }
    return kExitOk;
  }
  if (a.n > kMaxEnumerationSize) {
    throw UsageError("listing triangulations needs n <= " + std::to_string(kMaxEnumerationSize) +
                     "; use --count-only for larger n");
  }
  std::vector<DiagonalSet> all = AllTriangulations(a.n);
  std::sort(all.begin(), all.end(), LexLess);
  if (f == Format::kCsv) out << "index,diagonals\n";
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (f == Format::kCsv) {
      out << k << ',' << Quoted(all[k].ToString()) << '\n';
    } else {
      out << all[k].ToString() << '\n';
    }
  }
  const BigInt catalan = TriangulationCount(a.n);
  if (f == Format::kHuman) {
    out << "total: " << all.size() << " (Catalan C(" << a.n - 2 << ") = " << catalan << ")\n";
  }
  return BigInt(all.size()) == catalan ? kExitOk : kExitMismatch;
}

// ------------------------------------------------------------- blockers

struct BlockersArgs {
  int n = 0;
  bool total = false;
  std::vector<std::string> oracles;
};

int RunBlockers(const BlockersArgs& a, Format f, std::ostream& out) {
  CheckPolygonSize(a.n);
  bool structural = a.oracles.empty(), brute = false;
  for (const std::string& o : a.oracles) {
    structural = structural || o == "structural" || o == "both";
    brute = brute || o == "brute" || o == "both";
  }
  if (structural && a.n > 12) throw UsageError("the structural oracle needs n <= 12");
  if (brute && a.n > kMaxBruteForceSize) {
    throw UsageError("the brute oracle needs n <= " + std::to_string(kMaxBruteForceSize));
  }
  std::optional<std::vector<DiagonalSet>> from_structure, from_brute;
  if (structural) from_structure = EnumerateBlockers(a.n, !a.total);
  if (brute) {
    std::vector<DiagonalSet> all = BruteForceBlockers(a.n);
    if (a.total) {
      std::sort(all.begin(), all.end(), LexLess);
      from_brute = all;
    } else {
      from_brute = DistinctUpToRotation(all);
    }
  }
  const std::vector<DiagonalSet>& shown = from_structure ? *from_structure : *from_brute;
  const std::string source = from_structure ? "structural" : "brute";
  if (f == Format::kCsv) out << "index,edges\n";
  for (std::size_t k = 0; k < shown.size(); ++k) {
    if (f == Format::kCsv) {
      out << k << ',' << Quoted(shown[k].ToString()) << '\n';
    } else {
      out << shown[k].ToString() << '\n';
    }
  }
  bool ok = true;
  const BigInt per_class = BlockerCountFormula(a.n);
  const BigInt expected = a.total && a.n > 4 ? per_class * a.n : per_class;
  auto line = [&](const std::string& key, const std::string& human, const std::string& value) {
    if (f == Format::kHuman) {
      out << human << ": " << value << '\n';
    } else if (f == Format::kLines) {
      out << key << '=' << value << '\n';
    }
  };
  line("count", std::string(a.total ? "total" : "up to rotation") + " (" + source + ")",
       std::to_string(shown.size()));
  if (a.total) {
    std::ostringstream claim;
    claim << expected << (a.n > 4 ? " = " + std::to_string(a.n) + " x " + per_class.str() : "")
          << " (derived claim)";
    line("derived_total", "n x F_{2n-8}", claim.str());
  } else {
    line("formula", "F_{2n-8}", per_class.str());
  }
  ok = ok && BigInt(shown.size()) == expected;
  if (from_structure && from_brute) {
    const bool agree = *from_structure == *from_brute;
    line("oracles_agree", "structural = brute", YesNo(agree));
    ok = ok && agree;
  }
  return ok ? kExitOk : kExitMismatch;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  int n = 0;
  std::string edges;
};

int RunVerify(const VerifyArgs& a, Format f, std::ostream& out) {
  CheckPolygonSize(a.n);
  DiagonalSet b(a.n);
  try {
    b = DiagonalSet::Parse(a.n, a.edges);
  } catch (const ParseError& e) {
    throw UsageError(std::string("cannot parse --edges: ") + e.what());
  }
  const BlockerReport r = VerifyBlocker(b);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"n", std::to_string(r.n)},
      {"edges", b.ToString()},
      {"size", std::to_string(r.size)},
      {"minimum_size", YesNo(r.is_minimum_size)},
      {"blocking", YesNo(r.is_blocking)},
      {"blocker", YesNo(r.is_blocker())},
  };
  if (r.structure.structure) {
    const BlockerStructure& st = *r.structure.structure;
    rows.push_back({"structure", "a=" + std::to_string(st.a) + " m=" + std::to_string(st.m) +
                                     " beams=[" + Join(st.beams, ",") + "]"});
  } else {
    rows.push_back({"structure", "none (" + ToString(r.structure.violation) + ": " +
                                     r.structure.detail + ")"});
  }
  bool observations_pass = true;
  for (const ObservationResult& o : r.observations) {
    std::string value = o.passed ? "pass" : "fail";
    if (!o.passed) {
      if (o.vertex) value += " vertex " + std::to_string(*o.vertex);
      if (o.edge) value += " edge " + ToString(*o.edge);
      if (o.ear_count) value += " ears " + std::to_string(*o.ear_count);
    }
    observations_pass = observations_pass && o.passed;
    rows.push_back({"observation." + ToString(o.observation), value});
  }
  if (f == Format::kCsv) out << "key,value\n";
  for (const auto& [key, value] : rows) {
    switch (f) {
      case Format::kHuman:
        out << key << ": " << value << '\n';
        break;
      case Format::kLines:
        out << key << '=' << value << '\n';
        break;
      case Format::kCsv:
        out << key << ',' << Quoted(value) << '\n';
        break;
    }
  }
  // A blocker must have the normal form and pass every observation.
  if (r.is_blocker() && (!r.structure.structure || !observations_pass)) return kExitMismatch;
  return kExitOk;
}

// ---------------------------------------------------------------- count

struct CountArgs {
  int n_max = 0;
  bool identities = false;
  bool enumerate = false;
};

int RunCount(const CountArgs& a, Format f, std::ostream& out) {
  if (a.n_max < 4 || a.n_max > kMaxCountSize) {
    throw UsageError("--n-max must be in [4, " + std::to_string(kMaxCountSize) + "]");
  }
  if (a.identities && a.n_max < 8) throw UsageError("--identities needs --n-max >= 8");
  CountTable table(a.n_max);
  bool ok = true;
  if (f == Format::kCsv) {
    out << "n,recursion,formula" << (a.enumerate ? ",enumerated" : "") << ",per_k\n";
  }
  for (int n = 4; n <= a.n_max; ++n) {
    if (a.enumerate && n <= 12) {
      table.Record(n, CountSource::kEnumeration, BigInt(EnumerateBlockers(n, true).size()));
    }
    std::vector<std::string> per_k;
    for (int k = 2; k <= n - 2; ++k) per_k.push_back(table.Fk(n, k).str());
    const auto cells = table.Cells(n);
    std::string enumerated = "-";
    if (cells.size() > 2) enumerated = cells[2].value.str();
    ok = ok && table.RowAgrees(n);
    std::string joined;
    for (std::size_t p = 0; p < per_k.size(); ++p) {
      joined += (p ? (f == Format::kCsv ? ";" : " ") : "") + per_k[p];
    }
    switch (f) {
      case Format::kHuman:
        out << "n=" << n << "  f(n)=" << cells[0].value << "  F_" << 2 * n - 8 << '='
            << cells[1].value << (a.enumerate ? "  enumerated=" + enumerated : "")
            << "  f^k for k=2.." << n - 2 << ": " << joined << '\n';
        break;
      case Format::kLines:
        out << n << ' ' << cells[0].value << ' ' << cells[1].value
            << (a.enumerate ? " " + enumerated : "") << ' ' << joined << '\n';
        break;
      case Format::kCsv:
        out << n << ',' << cells[0].value << ',' << cells[1].value
            << (a.enumerate ? "," + enumerated : "") << ',' << joined << '\n';
        break;
    }
  }
  if (a.identities) {
    const IdentityReport r = VerifyIdentities(a.n_max);
    const auto failures = r.unweighted_failures();
    const IdentityRow& sample = r.unweighted_fibonacci.at(3);
    std::ostringstream unweighted;
    unweighted << "fails for " << failures.size() << " of " << r.unweighted_fibonacci.size()
               << " n (e.g. n=" << sample.n << ": " << sample.lhs << " vs " << sample.rhs << ")";
    const std::vector<std::pair<std::string, std::string>> rows = {
        {"identity.recursion", r.recursion_holds() ? "pass" : "fail"},
        {"identity.weighted_fibonacci", r.weighted_holds() ? "pass" : "fail"},
        {"identity.unweighted_fibonacci", unweighted.str()},
    };
    for (const auto& [key, value] : rows) {
      if (f == Format::kCsv) {
        out << key << ',' << Quoted(value) << '\n';
      } else {
        out << key << (f == Format::kHuman ? ": " : "=") << value << '\n';
      }
    }
    ok = ok && r.recursion_holds() && r.weighted_holds();
  }
  return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------- solve

struct GameArgs {
  int n = 0;
  std::string bias = "1:1";
  std::string first = "maker";
  bool standard = false;
};

struct SolveArgs {
  GameArgs game;
  bool allow_large = false;
  bool canonical = false;
};

int RunSolve(const SolveArgs& a, Format f, std::ostream& out) {
  const GameConfig c = ParseBias(a.game.n, a.game.bias, a.game.standard, ParsePlayer(a.game.first));
  SolverOptions options;
  options.allow_large = a.allow_large;
  options.canonicalize_rotations = a.canonical;
  try {
    CheckSolverFeasible(c, a.allow_large);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const SolveResult r = Solve(c, options);
  const std::string winner = ToString(r.winner);
  switch (f) {
    case Format::kHuman:
      out << (r.winner == Player::kMaker ? "maker in " + std::to_string(r.moves) : "breaker")
          << '\n';
      if (r.winner == Player::kBreaker) out << "breaker turns: " << r.moves << '\n';
      out << "bias: " << BiasDescription(c) << ", first: " << a.game.first << '\n'
          << "states visited: " << r.states_visited << '\n';
      break;
    case Format::kLines:
      out << "winner=" << winner << "\nmoves=" << r.moves << "\nstates=" << r.states_visited
          << '\n';
      break;
    case Format::kCsv:
      out << "n,bias,first,winner,moves,states\n"
          << c.n << ',' << Quoted(BiasDescription(c)) << ',' << a.game.first << ',' << winner
          << ',' << r.moves << ',' << r.states_visited << '\n';
      break;
  }
  return kExitOk;
}

// ------------------------------------------------------------ selfridge

int RunSelfridge(const GameArgs& a, Format f, std::ostream& out) {
  const GameConfig c = ParseBias(a.n, a.bias, true, Player::kMaker);
  const SelfridgeResult r =
      ErdosSelfridgePotential(c.n, c.maker_per_turn, c.breaker_per_turn);
  const std::string value = r.exact ? r.exact->str() : r.decimal;
  switch (f) {
    case Format::kHuman:
      out << r.ToString() << '\n';
      break;
    case Format::kLines:
      out << "potential=" << value << "\nthreshold=" << r.threshold.str()
          << "\nexact=" << YesNo(r.exact.has_value())
          << "\nimplies_breaker_win=" << YesNo(r.implies_breaker_win) << '\n';
      break;
    case Format::kCsv:
      out << "n,m,b,triangulations,potential,exact,threshold,implies_breaker_win\n"
          << r.n << ',' << r.maker_per_turn << ',' << r.breaker_per_turn << ','
          << r.triangulations << ',' << value << ',' << YesNo(r.exact.has_value()) << ','
          << r.threshold.str() << ',' << YesNo(r.implies_breaker_win) << '\n';
      break;
  }
  return kExitOk;
}

// -------------------------------------------------------------- playout

struct PlayoutArgs {
  GameArgs game;
  std::string maker = "paper_maker";
  std::string breaker = "random";
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
};

int RunPlayout(const PlayoutArgs& a, Format f, std::ostream& out) {
  const GameConfig c = ParseBias(a.game.n, a.game.bias, a.game.standard, ParsePlayer(a.game.first));
  const Transcript t = PlayOut(c, a.maker, a.breaker, a.seed);
  if (a.json) {
    out << t.ToJson() << '\n';
  } else if (f == Format::kCsv) {
    out << "index,player,diagonals,status_after\n";
    for (const TranscriptEntry& e : t.entries) {
      out << e.index << ',' << ToString(e.player) << ','
          << Quoted(DiagonalSet::FromDiagonals(c.n, e.diagonals).ToString()) << ','
          << ToString(e.status_after) << '\n';
    }
  } else {
    out << t.ToText();
  }
  return kExitOk;
}

// ------------------------------------------------------------ adversary

struct AdversaryArgs {
  int n = 0;
  std::string side = "maker";
  std::string first = "maker";
};

int RunAdversary(const AdversaryArgs& a, Format f, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> rows;
  bool ok;
  if (a.side == "maker") {
    if (a.n > 8) throw UsageError("exhaustive Maker check needs n <= 8");
    const MakerVerification r = VerifyMakerStrategy(a.n, ParsePlayer(a.first));
    rows = {{"leaves", std::to_string(r.leaves)},
            {"not_won", std::to_string(r.not_won)},
            {"wrong_length", std::to_string(r.wrong_length)},
            {"crossing_sets", std::to_string(r.crossing_sets)},
            {"invariant_violations", std::to_string(r.invariant_violations)}};
    ok = r.ok();
  } else {
    if (a.n < 5 || a.n > 8) throw UsageError("exhaustive Breaker check needs 5 <= n <= 8");
    const BreakerVerification r = VerifyBreakerStrategy(a.n);
    rows = {{"leaves", std::to_string(r.leaves)},
            {"not_won", std::to_string(r.not_won)},
            {"too_slow", std::to_string(r.too_slow)},
            {"bad_structure", std::to_string(r.bad_structure)},
            {"no_disjoint_blocker", std::to_string(r.no_disjoint_blocker)},
            {"longer_ear_run", std::to_string(r.longer_ear_run)}};
    ok = r.ok();
  }
  rows.push_back({"verdict", ok ? "pass" : "fail"});
  if (f == Format::kCsv) out << "key,value\n";
  for (const auto& [key, value] : rows) {
    out << key << (f == Format::kHuman ? ": " : f == Format::kLines ? "=" : ",") << value << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

// ----------------------------------------------------------------- play

struct PlayArgs {
  GameArgs game;
  std::string human = "maker";
  std::uint64_t seed = kDefaultSeed;
};

int RunPlay(const PlayArgs& a, std::istream& in, std::ostream& out) {
  const HumanRole human = ParseHumanRole(a.human);
  if (human == HumanRole::kNone) throw UsageError("--human must be maker or breaker");
  SessionManager sessions(a.seed);
  Session s = sessions.Create(a.game.n, human, a.game.bias, ParsePlayer(a.game.first));
  out << "n=" << s.state.config.n << " bias=" << BiasDescription(s.state.config)
      << " you=" << a.human << " seed=" << a.seed << '\n'
      << "enter diagonals as i-j[,k-l]; 'hint' suggests a move, 'quit' leaves\n";
  auto show = [&](const Session& x) {
    if (!x.engine_reply.empty()) {
      out << "engine: "
          << DiagonalSet::FromDiagonals(x.state.config.n, x.engine_reply).ToString() << '\n';
    }
    out << "maker:   " << x.state.maker.ToString() << "\nbreaker: " << x.state.breaker.ToString()
        << '\n';
  };
  show(s);
  std::string line;
  while (!s.state.Finished()) {
    out << "your move (" << Quota(s.state) << "): " << std::flush;
    if (!std::getline(in, line)) {
      out << "\nbye\n";
      return kExitOk;
    }
    if (line == "quit") return kExitOk;
    if (line == "hint") {
      const Hint h = sessions.SuggestMove(s.id);
      out << "hint: " << DiagonalSet::FromDiagonals(s.state.config.n, h.diagonals).ToString()
          << " (" << h.source << ")\n";
      continue;
    }
    try {
      std::vector<Diagonal> move;
      std::stringstream parts(line);
      std::string part;
      while (std::getline(parts, part, ',')) move.push_back(ParseDiagonal(s.state.config.n, part));
      s = sessions.SubmitMove(s.id, move);
      show(s);
    } catch (const ServiceError& e) {
      out << ToString(e.code()) << ": " << e.what() << '\n';
    } catch (const Error& e) {
      out << "could not read that: " << e.what() << '\n';
    }
  }
  out << "result: " << ToString(s.state.status) << '\n';
  if (const auto w = MakerWitness(s.state); w && s.state.status == Status::kMakerWon) {
    out << "triangulation: " << w->ToString() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- serve

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  std::string snapshot;
};

int RunServe(const ServeArgs& a, std::ostream& out, std::ostream& err) {
  SessionManager sessions;
  if (!a.snapshot.empty() && std::filesystem::exists(a.snapshot)) {
    sessions.LoadFile(a.snapshot);
    out << "restored " << sessions.size() << " session(s) from " << a.snapshot << '\n';
  }
  HttpServer server(sessions, a.static_dir);
  const int port = server.Bind(a.host, a.port);
  if (port < 0) {
    err << "error: cannot listen on " << a.host << ':' << a.port << '\n';
    return kExitUsage;
  }
  out << "listening on http://" << a.host << ':' << port << std::endl;

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);
  std::atomic<bool> signaled = false;
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    signaled = true;
    server.Stop();
  });
  const bool clean = server.Run();
  // Wake the waiter if the server stopped for another reason.
  if (!signaled) pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  if (!a.snapshot.empty()) {
    sessions.SaveFile(a.snapshot);
    out << "saved " << sessions.size() << " session(s) to " << a.snapshot << '\n';
  }
  return clean ? kExitOk : kExitUsage;
}

void AddGameOptions(CLI::App* cmd, GameArgs& g, bool with_first) {
  cmd->add_option("--n", g.n, "polygon size")->required();
  cmd->add_option("--bias", g.bias, "1:1, 1:2 (Breaker takes 2 only on its first turn) or m:b")
      ->capture_default_str();
  if (with_first) {
    cmd->add_option("--first", g.first, "maker or breaker")
        ->check(CLI::IsMember({"maker", "breaker"}))
        ->capture_default_str();
    cmd->add_flag("--standard", g.standard, "with --bias 1:2, Breaker takes 2 on every turn");
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Blockers and the Maker-Breaker game for triangulations of a convex polygon"};
  app.name(args.empty() ? "polyblock" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  Format format = Format::kHuman;
  app.add_option("--format", format,
                 "human | lines | csv. csv columns: triangulations index,diagonals; "
                 "blockers index,edges; verify key,value; count "
                 "n,recursion,formula[,enumerated],per_k; solve n,bias,first,winner,moves,states; "
                 "selfridge n,m,b,triangulations,potential,exact,threshold,implies_breaker_win; "
                 "playout index,player,diagonals,status_after")
      ->transform(CLI::CheckedTransformer(kFormats))
      ->capture_default_str();

  TriangulationsArgs tri;
  auto* c_tri = app.add_subcommand("triangulations", "list or count triangulations");
  c_tri->add_option("--n", tri.n, "polygon size")->required();
  c_tri->add_flag("--count-only", tri.count_only, "print the Catalan count only");

  BlockersArgs blk;
  bool up_to_rotation = false;
  auto* c_blk = app.add_subcommand("blockers", "enumerate blockers");
  c_blk->add_option("--n", blk.n, "polygon size")->required();
  auto* total_flag = c_blk->add_flag("--total", blk.total, "list every rotation");
  c_blk->add_flag("--up-to-rotation", up_to_rotation, "one set per rotation class (default)")
      ->excludes(total_flag);
  c_blk->add_option("--oracle", blk.oracles, "structural (n <= 12), brute (n <= 10) or both")
      ->check(CLI::IsMember({"structural", "brute", "both"}));

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "check an edge set against the blocker structure");
  c_ver->add_option("--n", ver.n, "polygon size")->required();
  c_ver->add_option("--edges", ver.edges, "edge list \"i-j,i-j,...\"")->required();

  CountArgs cnt;
  auto* c_cnt = app.add_subcommand("count", "blocker counts by recursion and formula");
  c_cnt->add_option("--n-max", cnt.n_max, "largest n (<= 200)")->required();
  c_cnt->add_flag("--identities", cnt.identities, "check the Fibonacci identities");
  c_cnt->add_flag("--enumerate", cnt.enumerate, "add structural enumeration for n <= 12");

  SolveArgs sol;
  auto* c_sol = app.add_subcommand("solve", "exact game value on a small board");
  AddGameOptions(c_sol, sol.game, true);
  c_sol->add_flag("--allow-large", sol.allow_large, "lift the size guard by one");
  c_sol->add_flag("--canonical", sol.canonical, "merge rotated positions in the memo");

  GameArgs sel;
  auto* c_sel = app.add_subcommand("selfridge", "biased Erdos-Selfridge potential");
  AddGameOptions(c_sel, sel, false);

  PlayoutArgs pout;
  auto* c_pout = app.add_subcommand("playout", "play two built-in strategies against each other");
  AddGameOptions(c_pout, pout.game, true);
  c_pout->add_option("--maker", pout.maker, "paper_maker, random or first_available")
      ->capture_default_str();
  c_pout->add_option("--breaker", pout.breaker, "paper_breaker, random or first_available")
      ->capture_default_str();
  c_pout->add_option("--seed", pout.seed, "random seed")->capture_default_str();
  c_pout->add_flag("--json", pout.json, "print the transcript as JSON");

  AdversaryArgs adv;
  auto* c_adv = app.add_subcommand("adversary", "check a strategy against every opponent reply");
  c_adv->add_option("--n", adv.n, "polygon size")->required();
  c_adv->add_option("--side", adv.side, "maker (1:1) or breaker (1:2 double-first)")
      ->check(CLI::IsMember({"maker", "breaker"}))
      ->capture_default_str();
  c_adv->add_option("--first", adv.first, "first mover for the Maker check")
      ->check(CLI::IsMember({"maker", "breaker"}))
      ->capture_default_str();

  PlayArgs ply;
  auto* c_ply = app.add_subcommand("play", "play against the engine in the terminal");
  AddGameOptions(c_ply, ply.game, true);
  c_ply->add_option("--human", ply.human, "maker or breaker")
      ->check(CLI::IsMember({"maker", "breaker"}))
      ->capture_default_str();
  c_ply->add_option("--seed", ply.seed, "engine seed")->capture_default_str();

  ServeArgs srv;
  auto* c_srv = app.add_subcommand("serve", "run the HTTP game service");
  c_srv->add_option("--port", srv.port, "listen port")->capture_default_str();
  c_srv->add_option("--host", srv.host, "listen address")->capture_default_str();
  c_srv->add_option("--static", srv.static_dir, "directory of web assets");
  c_srv->add_option("--snapshot", srv.snapshot, "session file, restored on start, saved on exit");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_tri) return RunTriangulations(tri, format, out);
    if (*c_blk) return RunBlockers(blk, format, out);
    if (*c_ver) return RunVerify(ver, format, out);
    if (*c_cnt) return RunCount(cnt, format, out);
    if (*c_sol) return RunSolve(sol, format, out);
    if (*c_sel) return RunSelfridge(sel, format, out);
    if (*c_pout) return RunPlayout(pout, format, out);
    if (*c_adv) return RunAdversary(adv, format, out);
    if (*c_ply) return RunPlay(ply, in, out);
    if (*c_srv) return RunServe(srv, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace polyblock
