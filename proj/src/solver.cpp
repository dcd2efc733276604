#include "afcount/solver.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "afcount/errors.hpp"
#include "afcount/io.hpp"
#include "afcount/oracle.hpp"

namespace afc {

Task task_from_string(const std::string& name) {
  if (name == "count") return Task::Count;
  if (name == "cred-count") return Task::CredCount;
  if (name == "pcount") return Task::PCount;
  if (name == "cred") return Task::Cred;
  if (name == "skep") return Task::Skep;
  if (name == "enumerate-oracle") return Task::EnumerateOracle;
  throw usage_error("unknown task: " + name);
}

Framework load_framework(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string fmt = format;
  if (fmt.empty()) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    fmt = ext == "tgf" ? "tgf" : "apx";
  }
  if (fmt == "apx") return parse_apx(buf.str());
  if (fmt == "tgf") return parse_tgf(buf.str());
  throw usage_error("unknown format: " + fmt);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int resolve_arg(const Framework& f, const std::string& name) {
  int i = f.index_of(name);
  if (i < 0) throw usage_error("unknown argument: " + name);
  return i;
}

struct DpRun {
  mpz_class count;
  size_t max_table = 0;
};

DpRun run_count(const Framework& f, const NiceTd& ntd, SemanticsKind sem, int cred, int threads,
                double& ms_dp, double& ms_purge, std::ostream* trace_out) {
  auto alg = make_local_alg(sem);
  auto t0 = Clock::now();
  Ttd ttd = run_dp(*alg, ntd, f, cred, threads);
  ms_dp += ms_since(t0);
  DpRun r;
  for (const auto& t : ttd.tables) r.max_table = std::max(r.max_table, t.size());
  if (trace_out) dump_trace(*trace_out, ntd, f, ttd.tables);
  auto t1 = Clock::now();
  PurgedTtd purged = purge(*alg, ntd, f, cred, ttd);
  ms_purge += ms_since(t1);
  r.count = count_extensions(ntd, purged);
  return r;
}

}  // namespace

RunResult solve(const Framework& f, const RunConfig& cfg, std::ostream* trace_out) {
  RunResult res;
  RunStats& st = res.stats;

  int cred = cfg.arg.empty() ? -1 : resolve_arg(f, cfg.arg);
  if ((cfg.task == Task::CredCount || cfg.task == Task::Cred || cfg.task == Task::Skep) &&
      cred < 0)
    throw usage_error("this task requires --arg");

  if (cfg.task == Task::EnumerateOracle) {
    std::ostringstream os;
    auto exts = oracle::enumerate(f, cfg.semantics, cfg.oracle_cap);
    for (const auto& e : exts) os << f.format_set(e) << "\n";
    os << exts.size();
    res.output = os.str();
    st.count = mpz_class(uint64_t(exts.size()));
    return res;
  }

  auto t0 = Clock::now();
  UGraph g = underlying_graph(f);
  Td td = compute_td(g, cfg.seed, cfg.td_passes);
  NiceTd ntd = make_nice(td);
  st.ms_td = ms_since(t0);
  st.width = ntd.width();
  st.nodes = ntd.size();

  switch (cfg.task) {
    case Task::Count:
    case Task::CredCount: {
      int filter = cfg.task == Task::Count ? -1 : cred;
      DpRun r = run_count(f, ntd, cfg.semantics, filter, cfg.threads, st.ms_dp, st.ms_purge,
                          trace_out);
      st.max_table = r.max_table;
      st.count = r.count;
      res.output = st.count.get_str();
      break;
    }
    case Task::Cred: {
      DpRun r = run_count(f, ntd, cfg.semantics, cred, cfg.threads, st.ms_dp, st.ms_purge,
                          trace_out);
      st.max_table = r.max_table;
      st.count = r.count;
      res.output = r.count > 0 ? "YES" : "NO";
      break;
    }
    case Task::Skep: {
      DpRun all = run_count(f, ntd, cfg.semantics, -1, cfg.threads, st.ms_dp, st.ms_purge,
                            trace_out);
      DpRun with = run_count(f, ntd, cfg.semantics, cred, cfg.threads, st.ms_dp, st.ms_purge,
                             nullptr);
      st.max_table = std::max(all.max_table, with.max_table);
      st.count = all.count - with.count;  // extensions missing the argument
      res.output = st.count == 0 ? "YES" : "NO";
      break;
    }
    case Task::PCount: {
      if (!cfg.projection) throw usage_error("pcount requires --projection");
      ArgSet p = f.set_of_names(*cfg.projection);
      auto alg = make_local_alg(cfg.semantics);
      auto t1 = Clock::now();
      Ttd ttd = run_dp(*alg, ntd, f, cred, cfg.threads);
      st.ms_dp = ms_since(t1);
      for (const auto& t : ttd.tables) st.max_table = std::max(st.max_table, t.size());
      if (trace_out) dump_trace(*trace_out, ntd, f, ttd.tables);
      auto t2 = Clock::now();
      PurgedTtd purged = purge(*alg, ntd, f, cred, ttd);
      st.ms_purge = ms_since(t2);
      auto t3 = Clock::now();
      ProjResult pr = run_proj(ntd, purged, p);
      st.ms_proj = ms_since(t3);
      st.count = pr.count;
      res.output = st.count.get_str();
      break;
    }
    case Task::EnumerateOracle:
      break;  // handled above
  }
  return res;
}

namespace {

void oracle_check(const Framework& f, const RunConfig& cfg, const RunStats& st,
                  std::ostream& err) {
  if (f.size() > cfg.oracle_cap) {
    err << "oracle-verify skipped: " << f.size() << " arguments exceed the cap of "
        << cfg.oracle_cap << "\n";
    return;
  }
  int cred = cfg.arg.empty() ? -1 : f.index_of(cfg.arg);
  mpz_class expected;
  switch (cfg.task) {
    case Task::Count:
      expected = mpz_class(uint64_t(oracle::count_extensions(f, cfg.semantics, cfg.oracle_cap)));
      break;
    case Task::CredCount:
    case Task::Cred:
      expected = mpz_class(uint64_t(oracle::count_credulous(f, cfg.semantics, cred, cfg.oracle_cap)));
      break;
    case Task::Skep: {
      uint64_t all = oracle::count_extensions(f, cfg.semantics, cfg.oracle_cap);
      uint64_t with = oracle::count_credulous(f, cfg.semantics, cred, cfg.oracle_cap);
      expected = mpz_class(all - with);
      break;
    }
    case Task::PCount: {
      ArgSet p = f.set_of_names(*cfg.projection);
      expected = mpz_class(
          uint64_t(oracle::count_projected_credulous(f, cfg.semantics, cred, p, cfg.oracle_cap)));
      break;
    }
    case Task::EnumerateOracle:
      return;
  }
  if (expected != st.count)
    throw Error(Error::Kind::OracleMismatch,
                "oracle mismatch: dp=" + st.count.get_str() + " oracle=" + expected.get_str());
}

}  // namespace

void run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Framework f = load_framework(cfg.input_path, cfg.format);
  RunResult res = solve(f, cfg, cfg.trace ? &err : nullptr);
  if (cfg.oracle_verify) oracle_check(f, cfg, res.stats, err);
  out << res.output << "\n";
  if (cfg.stats) {
    const RunStats& st = res.stats;
    out << "width=" << st.width << " nodes=" << st.nodes << " max_table=" << st.max_table
        << " count=" << st.count.get_str() << " ms_td=" << st.ms_td << " ms_dp=" << st.ms_dp
        << " ms_purge=" << st.ms_purge << " ms_proj=" << st.ms_proj << "\n";
  }
}

}  // namespace afc
