#include "calogero/cli.hpp"

#include "calogero/cache.hpp"
#include "calogero/cbasis.hpp"
#include "calogero/serialize.hpp"
#include "calogero/spectra.hpp"
#include "calogero/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <memory>
#include <sstream>
#include <thread>

namespace calogero {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string model = "a";
  int N = 1;
  std::string lambda;
  std::string mu;
  std::vector<std::string> labels;
  std::string method;
  std::string format = "json";
  bool verify = false;
  int max_weight = -1;
  std::string cache_dir;
  bool no_cache = false;
  bool paranoid = false;
  int jobs = 1;
  bool all_labels = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--model", o.model, "a or b")->check(CLI::IsMember({"a", "b", "A", "B"}));
  cmd->add_option("--N", o.N, "particle number")->check(CLI::PositiveNumber);
  cmd->add_option("--lambda", o.lambda, "coupling, as p/q");
  cmd->add_option("--mu", o.mu, "B-model coupling, as p/q");
  cmd->add_option("--format", o.format, "json, text or latex")->check(CLI::IsMember({"json", "text", "latex"}));
  cmd->add_option("--cache-dir", o.cache_dir, "result cache directory (default: $CALOGERO_CACHE)");
  cmd->add_flag("--no-cache", o.no_cache, "ignore the cache");
  cmd->add_flag("--paranoid", o.paranoid, "re-verify cached records on read");
  cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
}

Rational parse_rational_flag(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("--" + name + ": expected a rational p/q, got '" + text + "'");
  }
}

ModelParams params_from(const Options& o, const std::string& default_lambda = "") {
  const Model model = parse_model(o.model);
  const std::string lam = o.lambda.empty() ? default_lambda : o.lambda;
  if (lam.empty()) throw UsageError("--lambda is required");
  ModelParams p;
  p.model = model;
  p.N = o.N;
  p.lambda = parse_rational_flag("lambda", lam);
  if (model == Model::B) {
    if (o.mu.empty()) throw UsageError("--mu is required for model b");
    p.mu = parse_rational_flag("mu", o.mu);
  } else if (!o.mu.empty()) {
    throw UsageError("--mu only applies to model b");
  }
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return p;
}

Label parse_label(const std::string& text, int N) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("--n: cannot parse '" + text + "'");
    }
  }
  if (static_cast<int>(v.size()) != N)
    throw UsageError("--n: label " + text + " has " + std::to_string(v.size()) + " entries, N is " + std::to_string(N));
  return Label(std::move(v));
}

std::vector<Method> methods_from(const std::string& text, Model model) {
  if (text.empty()) return {methods_for(model).front()};
  if (text == "all") return methods_for(model);
  Method m;
  try {
    m = parse_method(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!method_supports(m, model)) throw UsageError("method " + text + " does not apply to model " + to_string(model));
  return {m};
}

// Runs fn(i) for i in [0, count) on up to `jobs` threads; results keep index
// order and the first exception (by index) is rethrown.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, int jobs, F fn) {
  std::vector<std::optional<T>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*results[i]));
  }
  return out;
}

// Installs the cache (if any) for the duration of one command.
class Session {
public:
  Session(const Options& o, std::ostream& err) : err_(err), paranoid_(o.paranoid) {
    std::string dir = o.cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv("CALOGERO_CACHE")) dir = env;
    if (!dir.empty() && !o.no_cache) {
      cache_ = std::make_unique<ResultCache>(dir);
      set_f_expansion_store(std::make_shared<CachedFExpansions>(*cache_));
    }
  }
  ~Session() {
    if (cache_) {
      set_f_expansion_store(nullptr);
      flush();
    }
  }
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  EigenRecord obtain(const Label& n, const ModelParams& params, Method method) {
    if (cache_) {
      if (auto hit = cache_->get_record(params, n, method)) {
        if (!paranoid_ || verify_eigen(*hit).ok()) return std::move(*hit);
        cache_->warn("cached record for " + n.to_string() + " " + to_string(method) +
                     " failed verification; recomputing");
      }
    }
    EigenRecord rec = solve(n, params, method);
    if (cache_) {
      try {
        cache_->put_record(rec);
      } catch (const std::exception& e) {
        cache_->warn(e.what());
      }
    }
    return rec;
  }

  void flush() {
    if (!cache_) return;
    for (const auto& w : cache_->take_warnings()) err_ << "warning: " << w << "\n";
  }

private:
  std::ostream& err_;
  bool paranoid_;
  std::unique_ptr<ResultCache> cache_;
};

void emit_reports_text(std::ostream& out, const std::vector<VerifyReport>& reports, const std::string& prefix) {
  for (const auto& r : reports) {
    std::istringstream lines(report_text(r));
    std::string line;
    while (std::getline(lines, line)) out << prefix << line << "\n";
  }
}

Json params_json(const ModelParams& p) {
  Json j;
  j["model"] = to_string(p.model);
  j["N"] = p.N;
  j["lambda"] = rational_json(p.lambda);
  j["mu"] = p.mu ? rational_json(*p.mu) : Json(nullptr);
  return j;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  const ModelParams params = params_from(o);
  if (o.labels.empty()) throw UsageError("solve needs at least one --n");
  std::vector<Label> labels;
  for (const auto& t : o.labels) labels.push_back(parse_label(t, params.N));
  const std::vector<Method> methods = methods_from(o.method, params.model);
  std::vector<std::pair<Label, Method>> jobs;
  for (const auto& n : labels)
    for (Method m : methods) {
      if (m == Method::sutherland && !n.is_partition()) {
        if (o.method == "all") continue;
        throw UsageError("method sutherland needs a partition label, got " + n.to_string());
      }
      jobs.emplace_back(n, m);
    }

  Session session(o, err);
  auto records = parallel_map<EigenRecord>(jobs.size(), o.jobs, [&](std::size_t i) {
    return session.obtain(jobs[i].first, params, jobs[i].second);
  });
  std::vector<VerifyReport> cross;
  if (o.method == "all")
    cross = parallel_map<VerifyReport>(labels.size(), o.jobs, [&](std::size_t i) { return cross_check(labels[i], params); });
  std::vector<VerifyReport> checks;
  if (o.verify)
    checks = parallel_map<VerifyReport>(records.size(), o.jobs, [&](std::size_t i) { return verify_eigen(records[i]); });
  session.flush();

  bool ok = true;
  for (const auto& r : cross) ok = ok && r.ok();
  for (const auto& r : checks) ok = ok && r.ok();

  if (o.format == "json") {
    Json doc;
    Json recs = Json::array();
    for (const auto& r : records) recs.push_back(record_json(r));
    doc["records"] = std::move(recs);
    if (!cross.empty()) {
      Json arr = Json::array();
      for (const auto& r : cross) arr.push_back(report_json(r));
      doc["cross_check"] = std::move(arr);
    }
    if (o.verify) {
      Json arr = Json::array();
      for (const auto& r : checks) arr.push_back(report_json(r));
      doc["verification"] = std::move(arr);
    }
    out << doc.dump(2) << "\n";
  } else if (o.format == "text") {
    for (std::size_t i = 0; i < records.size(); ++i) out << (i ? "\n" : "") << record_text(records[i]);
    if (!cross.empty() || !checks.empty()) out << "\n";
    emit_reports_text(out, cross, "");
    emit_reports_text(out, checks, "");
  } else {
    for (const auto& r : records) out << record_latex(r);
    emit_reports_text(out, cross, "% ");
    emit_reports_text(out, checks, "% ");
  }
  return ok ? 0 : 1;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  const ModelParams params = params_from(o);
  if (o.max_weight < 0) throw UsageError("table needs --max-weight >= 0");
  const std::vector<Method> methods = methods_from(o.method, params.model);
  const std::vector<Label> labels =
      o.all_labels ? tail_valid_labels(params.N, o.max_weight, o.max_weight) : partitions_up_to(params.N, o.max_weight);
  std::vector<std::pair<Label, Method>> jobs;
  for (const auto& n : labels)
    for (Method m : methods)
      if (m != Method::sutherland || n.is_partition()) jobs.emplace_back(n, m);

  Session session(o, err);
  auto records = parallel_map<EigenRecord>(jobs.size(), o.jobs, [&](std::size_t i) {
    return session.obtain(jobs[i].first, params, jobs[i].second);
  });
  std::vector<bool> verified;
  if (o.verify)
    verified = parallel_map<bool>(records.size(), o.jobs, [&](std::size_t i) { return verify_eigen(records[i]).ok(); });
  session.flush();
  const bool ok = std::all_of(verified.begin(), verified.end(), [](bool b) { return b; });

  auto leading_terms = [](const SymPoly& p) {
    std::vector<std::pair<Label, Rational>> v;
    if (p.is_zero()) return v;
    const MExpansion m = to_msym(p);
    v.assign(m.begin(), m.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      if (a.first.weight() != b.first.weight()) return a.first.weight() > b.first.weight();
      return a.first > b.first;
    });
    if (v.size() > 3) v.resize(3);
    return v;
  };

  if (o.format == "json") {
    Json doc = params_json(params);
    doc["max_weight"] = o.max_weight;
    Json rows = Json::array();
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      Json row;
      row["label"] = label_json(r.label);
      row["method"] = to_string(r.method);
      row["energy"] = rational_json(r.energy);
      Json lead = Json::array();
      for (const auto& [m, c] : leading_terms(r.poly)) {
        Json t;
        t["partition"] = label_json(m);
        t["coeff"] = rational_json(c);
        lead.push_back(std::move(t));
      }
      row["leading"] = std::move(lead);
      if (o.verify) row["verified"] = static_cast<bool>(verified[i]);
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
  } else if (o.format == "text") {
    out << "model " << to_string(params.model) << "  N=" << params.N << "  lambda=" << params.lambda;
    if (params.mu) out << "  mu=" << *params.mu;
    out << "  E0=" << ground_energy(params) << "\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      out << std::left << std::setw(14) << r.label.to_string() << std::setw(12) << to_string(r.method)
          << std::setw(10) << r.energy.to_string();
      bool first = true;
      for (const auto& [m, c] : leading_terms(r.poly)) {
        out << (first ? "" : ", ") << c << "*M" << m.to_string();
        first = false;
      }
      if (o.verify) out << (verified[i] ? "  ok" : "  FAILED");
      out << "\n";
    }
  } else {
    out << "\\begin{tabular}{lll}\n$\\mathbf{n}$ & method & $E_{\\mathbf{n}}$ \\\\\n\\hline\n";
    for (const auto& r : records) {
      std::string e = r.energy.to_string();
      if (auto s = e.find('/'); s != std::string::npos) e = "\\frac{" + e.substr(0, s) + "}{" + e.substr(s + 1) + "}";
      out << "$" << r.label.to_string() << "$ & " << to_string(r.method) << " & $" << e << "$ \\\\\n";
    }
    out << "\\end{tabular}\n";
  }
  return ok ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const ModelParams params = params_from(o);
  const int max_weight = o.max_weight < 0 ? 4 : o.max_weight;
  Session session(o, err);
  std::vector<Label> labels = partitions_up_to(params.N, max_weight);
  if (o.all_labels)
    for (const auto& n : tail_valid_labels(params.N, max_weight, max_weight))
      if (!n.is_partition()) labels.push_back(n);

  std::vector<VerifyReport> reports = parallel_map<VerifyReport>(labels.size(), o.jobs, [&](std::size_t i) {
    return cross_check(labels[i], params);
  });
  if (params.N == 1) reports.push_back(verify_reductions(params, max_weight));
  if (params.model == Model::A && params.lambda == Rational(1)) reports.push_back(verify_schur(params.N, max_weight));
  session.flush();

  const bool ok = std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.ok(); });
  if (o.format == "json") {
    Json doc = params_json(params);
    doc["max_weight"] = max_weight;
    doc["ok"] = ok;
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    doc["reports"] = std::move(arr);
    out << doc.dump(2) << "\n";
  } else {
    emit_reports_text(out, reports, o.format == "latex" ? "% " : "");
    out << (o.format == "latex" ? "% " : "") << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const Rational lambda = parse_rational_flag("lambda", o.lambda.empty() ? "1/2" : o.lambda);
  const int max_weight = o.max_weight < 0 ? 6 : o.max_weight;
  using Clock = std::chrono::steady_clock;
  Json rows = Json::array();
  for (int N : {2, 3}) {
    const ModelParams params = ModelParams::a(N, lambda);
    for (int w = 0; w <= max_weight; ++w) {
      const auto labels = partitions(N, w);
      auto t0 = Clock::now();
      std::size_t terms = 0;
      for (const auto& n : labels) terms += f_expand_uncached(n, lambda).size();
      auto t1 = Clock::now();
      clear_f_expansion_memo();
      auto t2 = Clock::now();
      std::size_t entries = 0;
      for (const auto& n : labels) entries += alpha_table(n, params).entries.size();
      auto t3 = Clock::now();
      auto row = [&](const char* op, std::size_t size, Clock::duration d) {
        Json r;
        r["op"] = op;
        r["N"] = N;
        r["weight"] = w;
        r["labels"] = labels.size();
        r["size"] = size;
        r["seconds"] = std::chrono::duration<double>(d).count();
        rows.push_back(std::move(r));
      };
      row("f_expand", terms, t1 - t0);
      row("alpha_table", entries, t3 - t2);
    }
  }
  if (o.format == "json") {
    Json doc;
    doc["lambda"] = rational_json(lambda);
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
  } else {
    out << std::left << std::setw(13) << "op" << std::setw(4) << "N" << std::setw(8) << "weight" << std::setw(8)
        << "labels" << std::setw(8) << "size" << "seconds\n";
    for (const auto& r : rows)
      out << std::setw(13) << r["op"].get<std::string>() << std::setw(4) << r["N"].get<int>() << std::setw(8)
          << r["weight"].get<int>() << std::setw(8) << r["labels"].get<std::size_t>() << std::setw(8)
          << r["size"].get<std::size_t>() << std::fixed << std::setprecision(6) << r["seconds"].get<double>() << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact eigenfunctions of the reduced Calogero Hamiltonians", "calogero"};
  app.require_subcommand(1);
  Options o;

  auto* solve_cmd = app.add_subcommand("solve", "eigenfunctions for given labels");
  add_common(solve_cmd, o);
  solve_cmd->add_option("--n", o.labels, "label, comma separated (repeatable)");
  solve_cmd->add_option("--method", o.method, "theorem1, theorem2, bmodel, sutherland or all");
  solve_cmd->add_flag("--verify", o.verify, "check each record against the operator");

  auto* table_cmd = app.add_subcommand("table", "spectrum up to a weight bound");
  add_common(table_cmd, o);
  table_cmd->add_option("--method", o.method, "theorem1, theorem2, bmodel, sutherland or all");
  table_cmd->add_option("--max-weight", o.max_weight, "largest |n|");
  table_cmd->add_flag("--all-labels", o.all_labels, "include non-partition labels with nonnegative tail sums");
  table_cmd->add_flag("--verify", o.verify, "check each record against the operator");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  add_common(verify_cmd, o);
  verify_cmd->add_option("--max-weight", o.max_weight, "largest |n| (default 4)");
  verify_cmd->add_flag("--all-labels", o.all_labels, "include non-partition labels");

  auto* bench_cmd = app.add_subcommand("bench", "time f_expand and alpha_table");
  bench_cmd->add_option("--lambda", o.lambda, "coupling (default 1/2)");
  bench_cmd->add_option("--max-weight", o.max_weight, "largest |n| (default 6)");
  bench_cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*solve_cmd) return cmd_solve(o, out, err);
    if (*table_cmd) return cmd_table(o, out, err);
    if (*verify_cmd) return cmd_verify(o, out, err);
    return cmd_bench(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace calogero
