// Command-line surface: saturation checks, containment queries, the greedy
// construction, the explicit families, exact Sat(n,u), conjecture scans and
// LP export. Exit codes: 0 verified / success, 1 domain failure, 2 usage.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "satseq/satseq.hpp"

using json = nlohmann::ordered_json;
using namespace satseq;

namespace {

constexpr int kSchema = 1;

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) raise(Errc::bad_parameters, "cannot open output file " + path);
  f << text;
}

json report_json(const SaturationReport& rep) {
  json j;
  j["verdict"] = verdict_name(rep.verdict);
  if (rep.counterexample)
    j["counterexample"] = {{"letter", rep.counterexample->letter}, {"gap", rep.counterexample->gap}};
  else
    j["counterexample"] = nullptr;
  if (rep.copy)
    j["copy"] = *rep.copy;
  else
    j["copy"] = nullptr;
  return j;
}

struct Options {
  std::string seq_text;
  std::string pattern_text;
  int n = 0;
  int n_max = 0;
  int t = 2;
  int pos = 0;
  std::optional<int> manual_N;
  std::optional<int> max_len;
  std::string family;
  std::string variant = "plain";
  std::string engine = "both";
  std::string format = "text";
  std::string out_path;
  std::string svg_path;
  int threads = 1;
};

int cmd_check(const Options& o) {
  Pattern u = Pattern::parse(o.pattern_text);
  Seq s = parse_seq(o.seq_text, o.n);
  SaturationReport rep = verify(s, o.n, u, o.threads);
  json j;
  j["schema"] = kSchema;
  j["n"] = o.n;
  j["pattern"] = u.str();
  j.update(report_json(rep));
  write_output(j.dump(2) + "\n", o.out_path);
  return rep.verdict == Verdict::Saturated ? 0 : 1;
}

int cmd_contains(const Options& o) {
  Pattern u = Pattern::parse(o.pattern_text);
  Seq s = parse_seq(o.seq_text, o.n ? std::optional<int>(o.n) : std::nullopt);
  if (o.pos > 0) {
    bool hit = contains_through(s, u, o.pos);
    if (o.format == "json") {
      json j{{"schema", kSchema}, {"pattern", u.str()}, {"through", o.pos}, {"contains", hit}};
      write_output(j.dump(2) + "\n", o.out_path);
    } else {
      write_output(hit ? "true\n" : "false\n", o.out_path);
    }
    return hit ? 0 : 1;
  }
  auto hit = contains(s, u);
  if (o.format == "json") {
    json j{{"schema", kSchema}, {"pattern", u.str()}, {"contains", hit.has_value()}};
    j["positions"] = hit ? json(*hit) : json(nullptr);
    write_output(j.dump(2) + "\n", o.out_path);
  } else if (hit) {
    std::string text;
    for (size_t i = 0; i < hit->size(); ++i)
      text += (i ? "," : "") + std::to_string((*hit)[i]);
    write_output(text + "\n", o.out_path);
  } else {
    write_output("none\n", o.out_path);
  }
  return hit ? 0 : 1;
}

int cmd_greedy(const Options& o) {
  Pattern u = Pattern::parse(o.pattern_text);
  Seq s = greedy_saturate(o.n, u);
  if (!o.svg_path.empty()) write_output(svg_scatter(s), o.svg_path);
  if (o.format == "json") {
    json j{{"schema", kSchema}, {"pattern", u.str()}, {"n", o.n},
           {"length", s.size()},  {"sequence", format_seq(s)}};
    write_output(j.dump(2) + "\n", o.out_path);
  } else {
    write_output(format_seq(s) + "\n", o.out_path);
  }
  return 0;
}

int cmd_construct(const Options& o) {
  ConstructionResult res;
  json extra;
  if (o.family == "sr" || o.family == "sr-prime") {
    Pattern u = Pattern::parse(o.pattern_text);
    Seq s = o.family == "sr" ? s_r(u) : s_r_prime(u);
    res.report = verify(s, s.alphabet, u, o.threads);
    res.seq = std::move(s);
    res.family = o.family;
  } else if (o.family == "blocks") {
    res = block_construction(o.n, Pattern::parse(o.pattern_text));
  } else if (o.family == "s-bracket") {
    res = s_bracket(o.n, Pattern::parse(o.pattern_text));
  } else if (o.family == "alternation") {
    AlternationVariant v;
    if (o.variant == "plain")
      v = AlternationVariant::plain;
    else if (o.variant == "plus-a")
      v = AlternationVariant::plus_a;
    else if (o.variant == "plus-ab")
      v = AlternationVariant::plus_ab;
    else
      raise(Errc::bad_parameters, "unknown variant " + o.variant);
    res = alternation_family(o.n, o.t, v);
    extra["t"] = o.t;
    extra["variant"] = o.variant;
    extra["pattern"] = alternation_pattern(o.t, v).str();
  } else if (o.family == "abcacbc") {
    res = closed_form_abcacbc(o.n);
  } else if (o.family == "infinite") {
    InfiniteAnalogue inf = infinite_analogue(o.n, Pattern::parse(o.pattern_text));
    res = std::move(inf.base);
    extra["p"] = inf.p;
    extra["k0"] = inf.k0;
    extra["middle_blocked"] = inf.middle_blocked;
  } else {
    raise(Errc::bad_parameters, "unknown family " + o.family);
  }
  if (!o.svg_path.empty()) write_output(svg_scatter(res.seq), o.svg_path);
  json j;
  j["schema"] = kSchema;
  j["family"] = res.family;
  j["n"] = res.seq.alphabet;
  j["length"] = res.seq.size();
  j["verdict"] = verdict_name(res.report.verdict);
  j["predicted_length"] = res.predicted_length ? json(*res.predicted_length) : json(nullptr);
  j.update(extra);
  j["sequence"] = format_seq(res.seq);
  if (o.format == "json") {
    write_output(j.dump(2) + "\n", o.out_path);
  } else {
    write_output(format_seq(res.seq) + "\n" + j.dump(2) + "\n", o.out_path);
  }
  return 0;
}

int cmd_exact(const Options& o) {
  Pattern u = Pattern::parse(o.pattern_text);
  Engine e = Engine::Both;
  if (o.engine == "search")
    e = Engine::Search;
  else if (o.engine == "ilp")
    e = Engine::Ilp;
  else if (o.engine != "both")
    raise(Errc::bad_parameters, "unknown engine " + o.engine);
  auto start = std::chrono::steady_clock::now();
  ExactResult res = sat_exact(o.n, u, e, o.manual_N);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  json j;
  j["schema"] = kSchema;
  j["n"] = o.n;
  j["pattern"] = u.str();
  j["sat"] = res.value;
  j["witness"] = format_seq(res.witness);
  j["engine"] = engine_name(res.engine);
  j["engines_agree"] = res.engines_agree;
  j["vars"] = res.ilp_vars;
  j["constraints"] = res.ilp_constraints;
  j["elapsed_ms"] = ms;
  write_output(j.dump(2) + "\n", o.out_path);
  return 0;
}

int cmd_scan(const Options& o) {
  Pattern u = Pattern::parse(o.pattern_text);
  ScanResult res = scan(u, o.n_max);
  if (!o.svg_path.empty()) write_output(svg_scatter(greedy_saturate(o.n_max, u)), o.svg_path);
  if (o.format == "json") {
    json rows = json::array();
    for (const ScanRecord& r : res.records)
      rows.push_back({{"n", r.n}, {"length", r.length}, {"delta", r.delta}, {"prefix_ok", r.prefix_ok}});
    json j{{"schema", kSchema},   {"pattern", u.str()},      {"records", rows},
           {"periodic", res.periodic}, {"period", res.period}, {"preperiod", res.preperiod}};
    write_output(j.dump(2) + "\n", o.out_path);
  } else {
    write_output(scan_csv(res), o.out_path);
  }
  return 0;
}

int cmd_lp_export(const Options& o) {
  Pattern u = Pattern::parse(o.pattern_text);
  int N = o.manual_N ? *o.manual_N : greedy_saturate(o.n, u).size() + 1;
  IlpModel model = build_ilp(o.n, N, u);
  write_output(export_lp(model), o.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Saturation toolkit for forbidden sequence patterns"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "worker threads for verification")
      ->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "verify saturation of a sequence");
  check->add_option("--seq", o.seq_text, "sequence, e.g. 1,2,3")->required();
  check->add_option("--n", o.n, "alphabet size")->required();
  check->add_option("--pattern", o.pattern_text, "forbidden pattern, e.g. aba")->required();
  check->add_option("--out", o.out_path, "output file (default stdout)");

  auto* ctn = app.add_subcommand("contains", "find a copy of a pattern");
  ctn->add_option("--seq", o.seq_text)->required();
  ctn->add_option("--pattern", o.pattern_text)->required();
  ctn->add_option("--n", o.n, "alphabet size (default: max letter)");
  ctn->add_option("--through", o.pos, "restrict to copies using this position");
  ctn->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  ctn->add_option("--out", o.out_path);

  auto* greedy = app.add_subcommand("greedy", "run the greedy saturation construction");
  greedy->add_option("--pattern", o.pattern_text)->required();
  greedy->add_option("--n", o.n)->required();
  greedy->add_option("--svg", o.svg_path, "write an SVG scatter of (position, letter)");
  greedy->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  greedy->add_option("--out", o.out_path);

  auto* cons = app.add_subcommand("construct", "emit an explicit family");
  cons->add_option("--family", o.family)
      ->required()
      ->check(CLI::IsMember({"sr", "sr-prime", "blocks", "s-bracket", "alternation", "abcacbc", "infinite"}));
  cons->add_option("--pattern", o.pattern_text);
  cons->add_option("--n", o.n);
  cons->add_option("--t", o.t, "repetition count (alternation)");
  cons->add_option("--variant", o.variant)->check(CLI::IsMember({"plain", "plus-a", "plus-ab"}));
  cons->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  cons->add_option("--svg", o.svg_path);
  cons->add_option("--out", o.out_path);

  auto* exact = app.add_subcommand("exact", "compute Sat(n, u) exactly");
  exact->add_option("--pattern", o.pattern_text)->required();
  exact->add_option("--n", o.n)->required();
  exact->add_option("--engine", o.engine)->check(CLI::IsMember({"both", "search", "ilp"}));
  int manual_N = 0, max_len = 0;
  exact->add_option("--N", manual_N, "override the grid width of the 0-1 program");
  exact->add_option("--out", o.out_path);

  auto* scan_cmd = app.add_subcommand("scan", "greedy lengths for n = r..n-max");
  scan_cmd->add_option("--pattern", o.pattern_text)->required();
  scan_cmd->add_option("--n-max", o.n_max)->required();
  scan_cmd->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json", "text"}));
  scan_cmd->add_option("--svg", o.svg_path, "SVG scatter of the n-max output");
  scan_cmd->add_option("--out", o.out_path);

  auto* lp = app.add_subcommand("lp-export", "write the 0-1 program in LP format");
  lp->add_option("--pattern", o.pattern_text)->required();
  lp->add_option("--n", o.n)->required();
  lp->add_option("--N", manual_N, "grid width (default: greedy length + 1)");
  lp->add_option("--out", o.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (manual_N > 0) o.manual_N = manual_N;
    if (max_len > 0) o.max_len = max_len;
    if (check->parsed()) return cmd_check(o);
    if (ctn->parsed()) return cmd_contains(o);
    if (greedy->parsed()) return cmd_greedy(o);
    if (cons->parsed()) return cmd_construct(o);
    if (exact->parsed()) return cmd_exact(o);
    if (scan_cmd->parsed()) return cmd_scan(o);
    if (lp->parsed()) return cmd_lp_export(o);
  } catch (const Error& e) {
    json j{{"schema", kSchema}, {"error", {{"kind", e.code_name()}, {"message", e.what()}}}};
    std::cerr << j.dump(2) << "\n";
    return e.code() == Errc::parse_error || e.code() == Errc::empty_input ||
                   e.code() == Errc::invalid_character
               ? 2
               : 1;
  } catch (const std::exception& e) {
    json j{{"schema", kSchema}, {"error", {{"kind", "Internal"}, {"message", e.what()}}}};
    std::cerr << j.dump(2) << "\n";
    return 1;
  }
  return 2;
}
