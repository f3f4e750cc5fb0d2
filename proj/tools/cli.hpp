#pragma once

// Command-line front end. Everything lives in run() so the test suite can
// drive the exact code path of the binary with in-memory streams.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kron/kron.hpp"

namespace kron::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

namespace detail {

inline std::string paren(const Partition& p) { return "(" + p.str() + ")"; }

inline Method parse_method(const std::string& m) {
  if (m == "copieri") return Method::CoPieri;
  if (m == "oracle") return Method::Oracle;
  return Method::Auto;
}

inline std::string word_text(const ReadingWord& w) {
  std::string steps;
  std::string frames;
  for (const auto& [st, fr] : w.columns) {
    if (!steps.empty()) {
      steps += ' ';
      frames += ' ';
    }
    steps += st.str();
    frames += std::to_string(fr);
  }
  return "[" + steps + " / " + frames + "]";
}

struct Args {
  std::string lambda, nu, mu, rho;
  int steps = -1;
  std::string format = "text";
  std::string method = "auto";
  std::string kind;
  bool dot = false;
  int max_nu = 8, max_part = 5, max_mu = 4, max_s = 4, max_size = 5;
};

inline void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

inline int cmd_count(const Args& a, std::ostream& out) {
  const Partition lambda = parse_partition(a.lambda);
  const Partition nu = parse_partition(a.nu);
  const Partition mu = parse_partition(a.mu);
  const Method method = parse_method(a.method);
  const Classification triple = classify(lambda, nu, mu);
  const bool copieri = method == Method::CoPieri || (method == Method::Auto && triple.supported_by_copieri());

  nlohmann::json j = {{"lambda", partition_json(lambda)},
                      {"nu", partition_json(nu)},
                      {"mu", partition_json(mu)},
                      {"class", std::string(to_string(triple.tag))}};
  std::int64_t value = 0;
  std::string note;
  if (copieri) {
    value = stable_kronecker_copieri(lambda, nu, mu);
    j["method"] = "copieri";
  } else {
    const StableReport report = stable_kronecker_report(lambda, nu, mu);
    value = report.value;
    j["method"] = "oracle";
    j["sequence"] = report.sequence;
    note = ", stable from n=" + std::to_string(report.sequence[report.sequence.size() - 2].first);
  }
  j["value"] = value;
  if (a.format == "json") {
    emit(out, j);
  } else {
    out << "gbar(" << paren(lambda) << "," << paren(nu) << "," << paren(mu) << ") = " << value << "  ["
        << j["method"].get<std::string>() << note << "]\n";
  }
  return kOk;
}

inline int cmd_enumerate(const Args& a, std::ostream& out, std::ostream& err) {
  const Partition lambda = parse_partition(a.lambda);
  const Partition nu = parse_partition(a.nu);
  const std::string head = a.kind + " " + paren(nu) + "\\" + paren(lambda);

  if (a.kind == "std" || a.kind == "std0") {
    if (a.steps < 0) {
      err << "enumerate " << a.kind << " needs --steps\n";
      return kUsage;
    }
    const auto tabs = a.kind == "std" ? enumerate_std(lambda, nu, a.steps) : enumerate_std0(lambda, nu, a.steps);
    if (a.format == "json") {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& t : tabs) list.push_back(t.str());
      emit(out, {{"kind", a.kind},
                 {"lambda", partition_json(lambda)},
                 {"nu", partition_json(nu)},
                 {"s", a.steps},
                 {"count", tabs.size()},
                 {"tableaux", list}});
    } else {
      out << "# " << head << " s=" << a.steps << ": " << tabs.size() << " tableaux\n";
      for (const auto& t : tabs) out << t.str() << '\n';
    }
    return kOk;
  }

  // sstd / latt
  const Partition mu = parse_partition(a.mu);
  if (a.steps >= 0 && a.steps != mu.size()) {
    err << "--steps must equal |mu| for " << a.kind << "\n";
    return kUsage;
  }
  const auto orbits = a.kind == "sstd" ? enumerate_sstd(lambda, nu, mu.size(), mu) : enumerate_latt(lambda, nu, mu);
  if (a.dot) {
    int i = 0;
    for (const auto& o : orbits) out << orbit_dot(o, "orbit" + std::to_string(++i));
    return kOk;
  }
  if (a.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& o : orbits) {
      nlohmann::json jo = orbit_json(o);
      jo["reading_word"] = reading_word_json(reading_word(o));
      list.push_back(std::move(jo));
    }
    emit(out, {{"kind", a.kind},
               {"lambda", partition_json(lambda)},
               {"nu", partition_json(nu)},
               {"mu", partition_json(mu)},
               {"count", orbits.size()},
               {"orbits", list}});
    return kOk;
  }
  out << "# " << head << " weight " << paren(mu) << ": " << orbits.size() << " orbits\n";
  for (const auto& o : orbits) {
    const ReadingWord w = reading_word(o);
    out << o.representative().str() << "  size=" << o.size() << "  word=" << word_text(w)
        << "  lattice=" << (is_lattice(w) ? "yes" : "no");
    const auto j = orbit_json(o);
    if (j.contains("classical")) out << "  classical=" << to_classical(o).str();
    out << '\n';
  }
  return kOk;
}

inline int cmd_classify(const Args& a, std::ostream& out) {
  const Partition lambda = parse_partition(a.lambda);
  const Partition nu = parse_partition(a.nu);
  const Partition mu = parse_partition(a.mu);
  const Classification c = classify(lambda, nu, mu);
  if (a.format == "json") {
    nlohmann::json j = {{"class", std::string(to_string(c.tag))},
                        {"label", std::string(case_label(c.tag))},
                        {"copieri_supported", c.supported_by_copieri()}};
    if (c.tag == TripleClass::CoPieriStaircase) {
      j["d"] = c.staircase_d;
      j["l"] = c.staircase_l;
    }
    emit(out, j);
    return kOk;
  }
  out << to_string(c.tag);
  if (c.tag == TripleClass::CoPieriStaircase) out << " (d=" << c.staircase_d << ", l=" << c.staircase_l << ")";
  out << ": " << case_label(c.tag) << '\n';
  return kOk;
}

inline int cmd_oracle(const Args& a, std::ostream& out, std::ostream& err) {
  std::string value;
  if (a.kind == "char") {
    value = to_string(character(parse_partition(a.lambda), parse_partition(a.rho)));
  } else if (a.kind == "kron") {
    value = std::to_string(kronecker(parse_partition(a.lambda), parse_partition(a.nu), parse_partition(a.mu)));
  } else if (a.kind == "stable") {
    value = std::to_string(
        stable_kronecker_oracle(parse_partition(a.lambda), parse_partition(a.nu), parse_partition(a.mu)));
  } else if (a.kind == "lr") {
    value = std::to_string(lr_coefficient(parse_partition(a.lambda), parse_partition(a.mu), parse_partition(a.nu)));
  } else if (a.kind == "kostka") {
    value = std::to_string(kostka(parse_partition(a.lambda), parse_partition(a.mu)));
  } else if (a.kind == "standard") {
    value = standard_count(parse_partition(a.lambda)).str();
  } else {
    err << "unknown oracle '" << a.kind << "'\n";
    return kUsage;
  }
  if (a.format == "json")
    emit(out, {{"oracle", a.kind}, {"value", nlohmann::json::parse(value)}});
  else
    out << value << '\n';
  return kOk;
}

inline int cmd_verify(const Args& a, std::ostream& out) {
  SweepResult r;
  if (a.kind == "maximal-depth")
    r = verify_maximal_depth(a.max_nu);
  else if (a.kind == "one-row")
    r = verify_one_row(a.max_part, a.max_mu);
  else
    r = verify_dims(a.max_s, a.max_size);
  if (a.format == "json") {
    nlohmann::json mm = nlohmann::json::array();
    for (const auto& m : r.mismatches)
      mm.push_back({{"lambda", partition_json(m.lambda)},
                    {"nu", partition_json(m.nu)},
                    {"mu", partition_json(m.mu)},
                    {"copieri", m.copieri},
                    {"oracle", m.oracle},
                    {"check", m.check}});
    emit(out, {{"sweep", r.name}, {"checked", r.checked}, {"mismatches", mm}, {"pass", r.ok()}});
  } else {
    for (const auto& m : r.mismatches)
      out << "MISMATCH " << m.check << " lambda=" << paren(m.lambda) << " nu=" << paren(m.nu)
          << " mu=" << paren(m.mu) << " copieri=" << m.copieri << " oracle=" << m.oracle << '\n';
    out << "verify " << r.name << ": " << r.checked << " checks, " << r.mismatches.size() << " mismatches: "
        << (r.ok() ? "PASS" : "FAIL") << '\n';
  }
  return r.ok() ? kOk : kMismatch;
}

inline void add_triple(CLI::App* cmd, Args& a) {
  cmd->add_option("-l,--lambda", a.lambda, "partition lambda, e.g. 2,1 (empty: \"\" or 0)");
  cmd->add_option("-n,--nu", a.nu, "partition nu");
  cmd->add_option("-m,--mu", a.mu, "partition mu (the weight)");
}

inline void add_format(CLI::App* cmd, Args& a) {
  cmd->add_option("--format", a.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

/// Loads and saves the character cache when KRON_CACHE_DIR names an
/// existing directory.
class CacheScope {
 public:
  CacheScope() {
    const char* dir = std::getenv("KRON_CACHE_DIR");
    if (dir && *dir && std::filesystem::is_directory(dir)) {
      file_ = std::filesystem::path(dir) / "characters.txt";
      default_character_table().load(file_);
    }
  }
  ~CacheScope() {
    if (file_.empty()) return;
    try {
      default_character_table().save(file_);
    } catch (...) {
    }
  }
  CacheScope(const CacheScope&) = delete;
  CacheScope& operator=(const CacheScope&) = delete;

 private:
  std::filesystem::path file_;
};

}  // namespace detail

/// args excludes the program name. Exit codes: 0 success, 1 verification
/// mismatch, 2 usage or domain error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Args;
  Args a;
  CLI::App app{"Stable Kronecker coefficients from lattice Kronecker tableaux", "kron"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "compute gbar(lambda, nu, mu)");
  detail::add_triple(count, a);
  count->add_option("--method", a.method,
                    "copieri: lattice count (maximal depth, or lambda and nu one-row); "
                    "oracle: character sums; auto: copieri when supported")
      ->check(CLI::IsMember({"copieri", "oracle", "auto"}));
  detail::add_format(count, a);

  auto* enumerate = app.add_subcommand("enumerate", "list Std, Std0, semistandard or latticed tableaux");
  enumerate->add_option("kind", a.kind)->required()->check(CLI::IsMember({"std", "std0", "sstd", "latt"}));
  detail::add_triple(enumerate, a);
  enumerate->add_option("-s,--steps", a.steps, "number of integral steps");
  enumerate->add_flag("--dot", a.dot, "Graphviz swap graphs of the orbits (sstd, latt)");
  detail::add_format(enumerate, a);

  auto* cls = app.add_subcommand("classify", "name the co-Pieri family of a triple");
  detail::add_triple(cls, a);
  detail::add_format(cls, a);

  auto* oracle = app.add_subcommand("oracle", "independent character-theoretic values");
  oracle->add_option("kind", a.kind)
      ->required()
      ->check(CLI::IsMember({"char", "kron", "stable", "lr", "kostka", "standard"}));
  detail::add_triple(oracle, a);
  oracle->add_option("--rho", a.rho, "cycle type for char");
  detail::add_format(oracle, a);

  auto* verify = app.add_subcommand("verify", "cross-check the lattice count against the oracles");
  verify->add_option("family", a.kind)->required()->check(CLI::IsMember({"maximal-depth", "one-row", "dims"}));
  verify->add_option("--max-nu", a.max_nu, "maximal-depth: largest |nu|");
  verify->add_option("--max-part", a.max_part, "one-row: largest a, b");
  verify->add_option("--max-mu", a.max_mu, "one-row: largest |mu|");
  verify->add_option("--max-s", a.max_s, "dims: largest s");
  verify->add_option("--max-size", a.max_size, "dims: largest |lambda|, |nu|");
  detail::add_format(verify, a);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  detail::CacheScope cache;
  try {
    if (*count) return detail::cmd_count(a, out);
    if (*enumerate) return detail::cmd_enumerate(a, out, err);
    if (*cls) return detail::cmd_classify(a, out);
    if (*oracle) return detail::cmd_oracle(a, out, err);
    if (*verify) return detail::cmd_verify(a, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace kron::cli
