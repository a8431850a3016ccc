// simseq: generate and verify minimal recursive sequences similar to N.
//
// Exit codes: 0 pass, 1 a verified claim failed (or a b-file diff mismatched),
// 2 usage error.

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simseq/genseq.hpp"
#include "simseq/io.hpp"
#include "simseq/merge.hpp"
#include "simseq/ocp.hpp"
#include "simseq/verify.hpp"

namespace {

using namespace simseq;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

/// SIMSEQ_DEFAULT_LIMIT, when set, replaces the built-in default of --limit.
std::optional<std::uint64_t> env_limit() {
  const char* v = std::getenv("SIMSEQ_DEFAULT_LIMIT");
  if (!v || !*v) return std::nullopt;
  std::uint64_t out = 0;
  std::string_view s(v);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || p != s.data() + s.size() || out == 0) {
    throw std::invalid_argument("SIMSEQ_DEFAULT_LIMIT must be a positive integer");
  }
  return out;
}

struct GenArgs {
  std::string prop;
  std::optional<std::uint64_t> start;
  std::uint64_t seed = 0;
  std::size_t count = 20;
  std::string format = "plain";
  std::string bfile;
};

int run_gen(const GenArgs& g) {
  const auto kind = parse_kind(g.prop);
  const SequenceSpec spec{kind, g.start.value_or(min_index(kind)), g.seed};
  const auto fmt = io::parse_format(g.format);
  const auto run = generate(spec, g.count);
  io::write_run(std::cout, run, fmt);
  if (g.bfile.empty()) return kPass;

  std::ifstream in(g.bfile);
  if (!in) throw std::invalid_argument("cannot open b-file '" + g.bfile + "'");
  const auto d = io::diff_bfile(run, io::read_bfile(in));
  std::cerr << "bfile: " << d.compared << " entries compared, " << d.outside
            << " outside the generated range\n";
  if (d.matches()) return kPass;
  std::cerr << "bfile: first mismatch at n = " << d.expected->n
            << ": file has " << d.expected->value << ", generated "
            << d.got << '\n';
  return kViolation;
}

struct VerifyArgs {
  std::string check;
  verify::Options opt;
};

void print_result(const verify::CheckResult& r) {
  std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << '\n';
  for (const auto& l : r.lines) std::cout << "    " << l << '\n';
}

int run_verify(VerifyArgs v) {
  if (v.check == "all") {
    // Every check at its built-in bounds; only --workers applies.
    verify::Options opt;
    opt.workers = v.opt.workers;
    bool ok = true;
    for (const auto& c : verify::kChecks) {
      const auto r = c.fn(opt);
      print_result(r);
      ok = ok && r.passed;
    }
    std::cout << (ok ? "all checks passed\n" : "some checks FAILED\n");
    return ok ? kPass : kViolation;
  }
  const auto fn = verify::find_check(v.check);
  if (!fn) {
    std::cerr << "unknown check '" << v.check << "'; known:";
    for (const auto& c : verify::kChecks) std::cerr << ' ' << c.name;
    std::cerr << " all\n";
    return kUsage;
  }
  if (!v.opt.limit) v.opt.limit = env_limit();
  const auto r = (*fn)(v.opt);
  print_result(r);
  return r.passed ? kPass : kViolation;
}

struct MergeArgs {
  std::string prop;
  std::optional<std::uint64_t> start;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::optional<std::uint64_t> limit;
  bool trace = false;
  std::string format = "plain";
};

int run_merge(const MergeArgs& m) {
  const auto kind = parse_kind(m.prop);
  const auto n0 = m.start.value_or(min_index(kind));
  const auto limit = m.limit.value_or(env_limit().value_or(100000));
  const auto fmt = io::parse_format(m.format);
  const auto rep = find_merge({kind, n0, m.a}, {kind, n0, m.b}, limit,
                              {.trace = m.trace});
  if (fmt == io::OutputFormat::Csv) {
    std::cout << "prop,n0,a,b,limit,merge_index,merge_value,suffix_end,"
                 "suffix_consistent\n"
              << to_string(kind) << ',' << n0 << ',' << m.a << ',' << m.b
              << ',' << limit << ',';
    if (rep.merged()) std::cout << *rep.merge_index << ',' << rep.merge_value;
    else std::cout << ',';
    std::cout << ',' << rep.suffix_end << ','
              << (rep.suffix_consistent ? 1 : 0) << '\n';
    if (m.trace) {
      std::cout << "n,r\n";
      for (const auto& s : rep.diff_trace) std::cout << s.n << ',' << s.r << '\n';
    }
    return kPass;
  }
  std::cout << "prop " << to_string(kind) << ", start index " << n0
            << ", seeds " << m.a << " and " << m.b << '\n';
  if (rep.merged()) {
    std::cout << "merge at " << *rep.merge_index << " (value "
              << rep.merge_value << ")\n"
              << "suffix checked through " << rep.suffix_end << ": "
              << (rep.suffix_consistent ? "consistent" : "DIVERGES") << '\n';
  } else {
    std::cout << "no merge up to " << limit << '\n';
  }
  if (m.trace) {
    std::cout << "r(n) at n = 1 (mod 8):";
    for (const auto& s : rep.diff_trace) std::cout << ' ' << s.n << ':' << s.r;
    std::cout << '\n';
  }
  return kPass;
}

struct PsiArgs {
  std::uint64_t k = 0;
  std::uint64_t n = 0;
  std::string format = "plain";
};

int run_psi(const PsiArgs& p) {
  const auto fmt = io::parse_format(p.format);
  const auto tr = psi_run(p.k, p.n);
  const auto prof = ocp_profile(p.k);
  if (fmt == io::OutputFormat::Plain) {
    std::cout << "k = " << p.k << ", N = " << p.n << ", segment ["
              << tr.first_index() << ", " << tr.first_index() + 8 << "]\n";
    for (unsigned i = 0; i < 9; ++i) {
      std::cout << "psi(" << tr.first_index() + i << ") = " << tr.values[i];
      if (i) std::cout << "  (+" << tr.jumps[i - 1] << ')';
      std::cout << '\n';
    }
    std::cout << "ocp " << prof.str() << '\n'
              << "psi(" << tr.first_index() + 8 << ") - N = " << tr.spread()
              << '\n';
    return kPass;
  }
  if (fmt == io::OutputFormat::Csv) std::cout << "n,psi,jump,ocp\n";
  for (unsigned i = 0; i < 9; ++i) {
    const auto n = tr.first_index() + i;
    if (fmt == io::OutputFormat::Bfile) {
      std::cout << n << ' ' << tr.values[i] << '\n';
    } else {
      std::cout << n << ',' << tr.values[i] << ','
                << (i ? std::to_string(tr.jumps[i - 1]) : "") << ','
                << (i < 8 ? std::to_string(prof.entries[i]) : "") << '\n';
    }
  }
  return kPass;
}

struct ExploreArgs {
  std::string problem;
  std::optional<std::uint64_t> limit;
  std::vector<std::uint64_t> seeds;
  std::uint64_t seed_max = 64;
  unsigned workers = 1;
  std::string format = "plain";
};

int run_explore(const ExploreArgs& e) {
  const auto problem = parse_open_problem(e.problem);
  const auto limit = e.limit.value_or(env_limit().value_or(10000000));
  const auto fmt = io::parse_format(e.format);
  const auto rep =
      explore_open(problem, {e.seeds, e.seed_max}, limit, e.workers);
  if (fmt == io::OutputFormat::Csv) {
    std::cout << "problem,prop,n0,reference,seed,limit,merge_index\n";
    for (const auto& f : rep.findings) {
      std::cout << to_string(problem) << ',' << to_string(rep.kind) << ','
                << rep.n0 << ',' << rep.reference << ',' << f.seed << ','
                << limit << ','
                << (f.merge_index ? std::to_string(*f.merge_index) : "") << '\n';
    }
    return kPass;
  }
  std::cout << "finding report for " << to_string(problem) << " (prop "
            << to_string(rep.kind) << ", start index " << rep.n0
            << ", reference seed " << rep.reference << ", limit " << limit
            << ")\n";
  for (const auto& f : rep.findings) {
    std::cout << "  seed " << f.seed << ": ";
    if (f.merge_index) {
      std::cout << "merges at n = " << *f.merge_index
                << (f.suffix_consistent ? "" : " (suffix DIVERGES)") << '\n';
    } else {
      std::cout << "open up to " << limit << '\n';
    }
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal recursive sequences similar to the positive integers"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a minimal recursive run");
  g->add_option("--prop", gen.prop, "Property: a1, a2, a3, a4")->required();
  g->add_option("--start-index", gen.start, "Index of the first term");
  g->add_option("--seed", gen.seed, "First term")->required();
  g->add_option("--count", gen.count, "Number of terms")->check(CLI::PositiveNumber);
  g->add_option("--format", gen.format, "plain, csv or bfile")
      ->check(CLI::IsMember({"plain", "csv", "bfile"}));
  g->add_option("--bfile", gen.bfile, "External b-file to diff against");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check a published claim (or 'all')");
  v->add_option("check", ver.check, "Check name")->required();
  v->add_option("--limit", ver.opt.limit, "Primary scan bound");
  v->add_option("--k-max", ver.opt.k_max, "Segment bound (theorem5, lemma5)");
  v->add_option("--n-max", ver.opt.n_max, "Start-value bound (theorem5)");
  v->add_option("--a-max", ver.opt.a_max, "Seed bound (theorem2, theorem3)");
  v->add_option("--workers", ver.opt.workers, "Worker threads (0 = all cores)");

  MergeArgs mer;
  auto* m = app.add_subcommand("merge", "Find where two runs coincide");
  m->add_option("--prop", mer.prop, "Property")->required();
  m->add_option("--start-index", mer.start, "Index of the first term");
  m->add_option("--a", mer.a, "Seed of the first run")->required();
  m->add_option("--b", mer.b, "Seed of the second run")->required();
  m->add_option("--limit", mer.limit, "Index bound");
  m->add_flag("--trace", mer.trace, "Print r(n) at n = 1 (mod 8)");
  m->add_option("--format", mer.format, "plain or csv")
      ->check(CLI::IsMember({"plain", "csv"}));

  PsiArgs psi;
  auto* p = app.add_subcommand("psi", "Trace psi over [4k+1, 4k+9]");
  p->add_option("--k", psi.k, "Segment parameter")->required();
  p->add_option("--n", psi.n, "psi(4k+1)")->required();
  p->add_option("--format", psi.format, "plain, csv or bfile")
      ->check(CLI::IsMember({"plain", "csv", "bfile"}));

  ExploreArgs exp;
  auto* e = app.add_subcommand("explore", "Scan an open merging question");
  e->add_option("problem", exp.problem, "a3-16, a3-general or a4-general")
      ->required()
      ->check(CLI::IsMember({"a3-16", "a3-general", "a4-general"}));
  e->add_option("--limit", exp.limit, "Index bound");
  e->add_option("--seeds", exp.seeds, "Seeds to compare (comma separated)")
      ->delimiter(',');
  e->add_option("--seed-max", exp.seed_max, "Bound for the default seed set");
  e->add_option("--workers", exp.workers, "Worker threads (0 = all cores)");
  e->add_option("--format", exp.format, "plain or csv")
      ->check(CLI::IsMember({"plain", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kUsage;
  }

  try {
    if (*g) return run_gen(gen);
    if (*v) return run_verify(ver);
    if (*m) return run_merge(mer);
    if (*p) return run_psi(psi);
    if (*e) return run_explore(exp);
  } catch (const std::logic_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const CapacityError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const io::BfileError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kViolation;
  }
  return kUsage;
}
