#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "convexlab/cubical.hpp"
#include "convexlab/error.hpp"
#include "convexlab/generators.hpp"
#include "convexlab/io.hpp"
#include "convexlab/kernels.hpp"
#include "convexlab/parameters.hpp"
#include "convexlab/probe.hpp"
#include "convexlab/psi.hpp"
#include "convexlab/verify.hpp"

namespace {

using convexlab::input_error;
using convexlab::MemberMask;
using convexlab::size_error;

// ordered key=value report, printable as lines or one JSON object
struct Report {
  std::vector<std::pair<std::string, std::string>> kv;

  void add(const std::string& k, const std::string& v) { kv.emplace_back(k, v); }
  void add(const std::string& k, const char* v) { kv.emplace_back(k, v); }
  void add(const std::string& k, bool v) { kv.emplace_back(k, v ? "1" : "0"); }
  void add(const std::string& k, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    kv.emplace_back(k, buf);
  }
  template <class T>
  void add(const std::string& k, T v) {
    kv.emplace_back(k, std::to_string(v));
  }

  void print(bool as_json) const {
    if (as_json) {
      nlohmann::ordered_json j;
      for (const auto& [k, v] : kv) j[k] = v;
      std::cout << j.dump(2) << "\n";
      return;
    }
    for (const auto& [k, v] : kv) std::cout << k << "=" << v << "\n";
  }
};

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream s(text);
  std::string part;
  while (std::getline(s, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw input_error("'" + part + "' is not a member index");
    out.push_back(std::stoull(part));
  }
  return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text, const std::string& flag) {
  std::vector<unsigned> out;
  std::stringstream s(text);
  std::string part;
  while (std::getline(s, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw input_error(flag + ": '" + part + "' is not a number");
    out.push_back(static_cast<unsigned>(std::stoul(part)));
  }
  if (out.empty()) throw input_error(flag + ": expected a comma-separated list");
  return out;
}

MemberMask mask_of_indices(const std::vector<std::size_t>& idx, std::size_t n) {
  MemberMask m = 0;
  for (std::size_t i : idx) {
    if (i >= n)
      throw input_error("member index " + std::to_string(i) + " out of range, family has " +
                        std::to_string(n));
    if (i >= 64) throw size_error("member indices above 63 are unsupported");
    m |= MemberMask{1} << i;
  }
  return m;
}

std::string join_points(const convexlab::PointSet& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(pts[i]);
  }
  return out;
}

void add_certificate(Report& rep, const convexlab::CertificateReport& cert) {
  rep.add("certificate", cert.ok ? "pass" : "fail");
  for (std::size_t i = 0; i < cert.lines.size(); ++i)
    rep.add("certificate.line" + std::to_string(i), cert.lines[i]);
}

convexlab::GradedKind graded_kind_of(const std::string& name) {
  if (name == "radon") return convexlab::GradedKind::radon;
  if (name == "helly") return convexlab::GradedKind::helly;
  if (name == "colorful-helly") return convexlab::GradedKind::colorful_helly;
  throw input_error("unknown graded kind '" + name + "'");
}

int run_analyze(const std::string& input, const std::string& params, std::size_t t_max,
                std::size_t colorful_guard, bool json) {
  const auto loaded = convexlab::load_system(input);
  const convexlab::NamedSetSystem named = loaded.flattened();
  const convexlab::SetSystem& sys = named.system;
  convexlab::ColorfulOptions guard;
  guard.member_guard = colorful_guard;
  Report rep;
  rep.add("input", input);
  rep.add("ground", sys.ground_size);
  rep.add("members", sys.size());

  std::stringstream s(params);
  std::string part;
  bool any = false;
  while (std::getline(s, part, ',')) {
    any = true;
    if (part == "radon") {
      rep.add("radon", convexlab::radon_number(sys));
    } else if (part == "helly") {
      rep.add("helly", convexlab::helly_number(sys));
    } else if (part == "colorful-helly") {
      rep.add("colorful-helly", convexlab::colorful_helly_number(sys, guard));
    } else if (part.rfind("graded:", 0) == 0) {
      const std::string kind = part.substr(7);
      convexlab::GradedOptions gopts;
      gopts.colorful = guard;
      const auto prof = convexlab::graded(sys, graded_kind_of(kind), t_max, gopts);
      for (std::size_t t = 1; t <= t_max; ++t)
        rep.add("graded." + kind + ".t" + std::to_string(t), prof.at(t));
    } else {
      throw input_error("unknown parameter '" + part + "'");
    }
  }
  if (!any) throw input_error("--params: expected a comma-separated list");
  rep.print(json);
  return 0;
}

int run_homology(const std::string& input, const std::optional<std::string>& subfamily,
                 std::size_t h, bool json) {
  const auto loaded = convexlab::load_system(input);
  if (!loaded.cubical)
    throw input_error(input + " holds an abstract set system; homology needs a cubical one");
  const auto& sys = loaded.cells.system;
  MemberMask mask = 0;
  std::string shown = "all";
  if (subfamily) {
    mask = mask_of_indices(parse_index_list(*subfamily), sys.size());
    shown = *subfamily;
  } else {
    for (std::size_t i = 0; i < sys.size(); ++i) {
      if (i >= 64) throw size_error("families above 64 members are unsupported");
      mask |= MemberMask{1} << i;
    }
  }
  const auto bv = convexlab::betti(sys, mask, h);
  Report rep;
  rep.add("input", input);
  rep.add("subfamily", shown);
  rep.add("h", h);
  rep.add("empty", bv.empty_intersection);
  for (std::size_t q = 0; q <= h; ++q)
    rep.add("betti." + std::to_string(q), bv.reduced[q]);
  rep.print(json);
  return 0;
}

int run_shatter(const std::string& input, std::size_t h, std::size_t t_max, bool json) {
  const auto loaded = convexlab::load_system(input);
  if (!loaded.cubical)
    throw input_error(input + " holds an abstract set system; shatter needs a cubical one");
  const auto& sys = loaded.cells.system;
  Report rep;
  rep.add("input", input);
  rep.add("h", h);
  for (std::size_t t = 1; t <= t_max; ++t)
    rep.add("shatter.t" + std::to_string(t), convexlab::shatter_value(sys, h, t));
  rep.print(json);
  return 0;
}

int emit_counterexample(Report& rep, const convexlab::VerifyReport& vr,
                        const std::string& emit) {
  if (!emit.empty() && vr.system) {
    convexlab::NamedSetSystem named;
    named.system = *vr.system;
    convexlab::save_set_system(emit + ".system", named);
    rep.add("counterexample.system", emit + ".system");
    if (vr.points) {
      convexlab::save_points(emit + ".points", *vr.points);
      rep.add("counterexample.points", emit + ".points");
    }
  }
  return 1;
}

int run_verify_corpus(const std::string& which, const std::string& corpus, std::size_t t_max,
                      std::size_t slack, const std::string& emit, bool json) {
  const auto spec = convexlab::CorpusSpec::parse(corpus);
  convexlab::VerifyReport vr;
  if (which == "radon-bound")
    vr = convexlab::verify_radon_bound(spec, t_max, slack);
  else if (which == "levi")
    vr = convexlab::verify_levi(spec, t_max);
  else
    vr = convexlab::verify_helly_growth(spec, t_max);

  Report rep;
  rep.add("check", which);
  rep.add("corpus", spec.describe());
  rep.add("t_max", t_max);
  rep.add("checked", vr.checked);
  rep.add("skipped", vr.skipped);
  rep.add("result", vr.ok ? "pass" : "fail");
  int code = 0;
  if (!vr.ok) {
    rep.add("detail", vr.detail);
    if (vr.t) rep.add("t", *vr.t);
    if (vr.points) rep.add("points", join_points(*vr.points));
    code = emit_counterexample(rep, vr, emit);
    code = 1;
  }
  rep.print(json);
  return code;
}

int run_verify_minimal(const std::optional<std::size_t>& k, const std::string& input,
                       const std::string& points_path, bool json) {
  convexlab::SetSystem sys;
  convexlab::PointSet points;
  Report rep;
  if (k) {
    const auto fam = convexlab::gen_binary_words(*k);
    sys = fam.system;
    points = fam.s;
    rep.add("family", "binary-words k=" + std::to_string(*k));
  } else {
    if (input.empty() || points_path.empty())
      throw input_error("minimal-np needs either --k or both --input and --points");
    sys = convexlab::load_system(input).flattened().system;
    points = convexlab::load_points(points_path);
    rep.add("family", input);
  }
  rep.add("points", join_points(points));
  const auto verdict = convexlab::verify_minimal_nonpartitionable(sys, points);
  int code = 0;
  switch (verdict.kind) {
    case convexlab::MinimalityVerdict::Kind::minimal:
      rep.add("result", "minimal");
      break;
    case convexlab::MinimalityVerdict::Kind::not_nonpartitionable:
      rep.add("result", "not-nonpartitionable");
      rep.add("witness.block0", join_points(verdict.witness_partition->block0));
      rep.add("witness.block1", join_points(verdict.witness_partition->block1));
      code = 1;
      break;
    case convexlab::MinimalityVerdict::Kind::not_minimal:
      rep.add("result", "not-minimal");
      rep.add("witness.redundant_member", *verdict.redundant_member);
      code = 1;
      break;
  }
  rep.print(json);
  return code;
}

int run_probe(const std::string& input, std::size_t s, std::size_t k, std::size_t budget,
              std::uint64_t seed, const std::optional<std::size_t>& hyp_m,
              std::size_t colorful_guard, bool json) {
  const auto sys = convexlab::load_system(input).flattened().system;
  convexlab::TupleFractionOptions opts;
  opts.exact_budget = budget;
  opts.samples = budget;
  opts.seed = seed;
  const auto probe = convexlab::probe_fractional_helly(sys, s, k, opts);
  Report rep;
  rep.add("input", input);
  rep.add("n", probe.n);
  rep.add("s", probe.s);
  rep.add("alpha.exact", probe.alpha.exact);
  rep.add("alpha.hits", probe.alpha.hits);
  rep.add("alpha.total", probe.alpha.total);
  rep.add("alpha.value", probe.alpha.value);
  rep.add("beta.element", probe.beta.element);
  rep.add("beta.depth", probe.beta.depth);
  rep.add("beta.fraction", probe.beta.fraction);
  rep.add("k", probe.k);
  rep.add("clique.size", probe.clique.size);
  rep.add("clique.exact", probe.clique.exact);
  rep.add("clique.fraction", probe.clique_fraction);
  if (hyp_m) {
    convexlab::ColorfulOptions guard;
    guard.member_guard = colorful_guard;
    const auto hyp = convexlab::check_colorful_clique_hypotheses(sys, k, *hyp_m, guard);
    rep.add("hypotheses.m", hyp.m);
    rep.add("hypotheses.ch_mk", hyp.ch_mk);
    rep.add("hypotheses.h_m", hyp.h_m);
    rep.add("hypotheses.hold", hyp.holds());
  }
  rep.print(json);
  return 0;
}

convexlab::PsiTables tables_from_files(const std::string& r_path, const std::string& m_path,
                                       std::size_t d) {
  convexlab::PsiTables tables;
  tables.d = d;
  for (const auto& [k, v] : convexlab::load_table(r_path)) {
    if (k > 0xffffffffull) throw input_error("r table key " + std::to_string(k) + " too large");
    tables.r_table[static_cast<unsigned>(k)] = v;
  }
  for (const auto& [k, v] : convexlab::load_table(m_path)) tables.m_table[k] = v;
  tables.validate();
  return tables;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite convexity and cubical homology workbench"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "dump reports as one JSON object");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "compute parameters of a set system");
  std::string an_input, an_params = "radon,helly";
  std::size_t an_tmax = 3, an_guard = 10;
  analyze->add_option("--input", an_input, "system file")->required();
  analyze->add_option("--params", an_params,
                      "comma list: radon, helly, colorful-helly, graded:KIND");
  analyze->add_option("--t-max", an_tmax, "profile length for graded parameters");
  analyze->add_option("--colorful-guard", an_guard,
                      "member cap for the colorful enumeration, default 10");

  // generate with one subcommand per family
  auto* generate = app.add_subcommand("generate", "construct a family and its certificate");
  generate->require_subcommand(1);
  std::string gen_output, gen_points_output;
  std::string gen_u, gen_f;
  std::size_t gen_k = 3;
  auto* g_helly = generate->add_subcommand("helly-seq", "graded-Helly sequence realization");
  g_helly->add_option("--u", gen_u, "comma list, the target profile")->required();
  g_helly->add_option("--output", gen_output, "system file to write")->required();
  auto* g_words = generate->add_subcommand("binary-words", "binary-word family and point set");
  g_words->add_option("--k", gen_k, "block count, 2..5")->required();
  g_words->add_option("--output", gen_output, "system file to write")->required();
  g_words->add_option("--points-output", gen_points_output, "points file to write");
  auto* g_shatter = generate->add_subcommand("shatter", "ring-in-box shatter family");
  g_shatter->add_option("--f", gen_f, "comma list, the target shatter profile")->required();
  g_shatter->add_option("--output", gen_output, "system file to write")->required();
  auto* g_random = generate->add_subcommand("random", "seeded random family");
  std::string gr_kind = "abstract";
  std::size_t gr_n = 4, gr_ground = 12;
  std::vector<std::size_t> gr_grid{12, 12};
  double gr_density = 0.5;
  std::uint64_t gr_seed = 1;
  g_random->add_option("--kind", gr_kind, "abstract | intervals | boxes");
  g_random->add_option("--n", gr_n, "member count");
  g_random->add_option("--ground", gr_ground, "ground size (abstract) or cells (intervals)");
  g_random->add_option("--grid", gr_grid, "grid extents for boxes")->expected(2, 3);
  g_random->add_option("--density", gr_density, "abstract membership probability");
  g_random->add_option("--seed", gr_seed, "rng seed");
  g_random->add_option("--output", gen_output, "system file to write")->required();

  // homology
  auto* homology = app.add_subcommand("homology", "Betti numbers of a member intersection");
  homology->set_help_flag("--help", "print help");  // frees -h for the degree option
  std::string ho_input;
  std::optional<std::string> ho_subfamily;
  std::size_t ho_h = 1;
  homology->add_option("--input", ho_input, "cubical system file")->required();
  homology->add_option("--subfamily", ho_subfamily, "comma list of member indices, default all");
  homology->add_option("--h", ho_h, "top homology degree");

  // shatter
  auto* shatter = app.add_subcommand("shatter", "homological shatter profile");
  shatter->set_help_flag("--help", "print help");
  std::string sh_input;
  std::size_t sh_h = 0, sh_tmax = 5;
  shatter->add_option("--input", sh_input, "cubical system file")->required();
  shatter->add_option("--h", sh_h, "top homology degree");
  shatter->add_option("--t-max", sh_tmax, "profile length");

  // verify
  auto* verify = app.add_subcommand("verify", "check a proposition over a corpus or input");
  verify->require_subcommand(1);
  std::string ve_corpus = "exhaustive:3,3", ve_emit;
  std::size_t ve_tmax = 6;
  auto add_corpus_cmd = [&](const char* name, const char* help) {
    auto* cmd = verify->add_subcommand(name, help);
    cmd->add_option("--corpus", ve_corpus, "exhaustive:G,M or random:COUNT:SEED");
    cmd->add_option("--t-max", ve_tmax, "largest subfamily size bound");
    cmd->add_option("--emit", ve_emit, "prefix for counterexample files");
    return cmd;
  };
  auto* v_radon = add_corpus_cmd("radon-bound", "graded Radon values stay within t+1");
  std::size_t ve_slack = 1;
  v_radon->add_option("--slack", ve_slack, "allowed excess over t, 0 turns the check strict");
  auto* v_levi = add_corpus_cmd("levi", "graded Helly stays below graded Radon");
  auto* v_growth = add_corpus_cmd("helly-growth", "profiles only increase by landing on t");
  auto* v_minimal = verify->add_subcommand("minimal-np", "minimal non-partitionability");
  std::optional<std::size_t> vm_k;
  std::string vm_input, vm_points;
  v_minimal->add_option("--k", vm_k, "check the binary-word family for this k");
  v_minimal->add_option("--input", vm_input, "system file");
  v_minimal->add_option("--points", vm_points, "points file");

  // probe-fh
  auto* probe = app.add_subcommand("probe-fh", "fractional-Helly probe");
  std::string pr_input;
  std::size_t pr_s = 2, pr_k = 2, pr_budget = 1000000, pr_guard = 10;
  std::uint64_t pr_seed = 1;
  std::optional<std::size_t> pr_m;
  probe->add_option("--input", pr_input, "system file")->required();
  probe->add_option("--s", pr_s, "tuple size");
  probe->add_option("--k", pr_k, "clique arity");
  probe->add_option("--budget", pr_budget, "exact enumeration budget / sample count");
  probe->add_option("--seed", pr_seed, "sampling seed");
  probe->add_option("--m", pr_m, "also check the colorful/graded hypotheses for (k, m)");
  probe->add_option("--colorful-guard", pr_guard,
                    "member cap for the colorful enumeration, default 10");

  // psi
  auto* psi = app.add_subcommand("psi", "evaluate the gate function over plug-in tables");
  unsigned ps_b = 1;
  std::uint64_t ps_t = 1;
  std::size_t ps_d = 2;
  std::string ps_rtable, ps_mtable;
  psi->add_option("--b", ps_b, "case parameter")->required();
  psi->add_option("--t", ps_t, "argument")->required();
  psi->add_option("--r-table", ps_rtable, "table file for r(b,d)")->required();
  psi->add_option("--m-table", ps_mtable, "table file for m(x)")->required();
  psi->add_option("--d", ps_d, "dimension tag used in messages");

  // let --json after a subcommand bubble up to the app flag
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands(nullptr)) {
      sub->fallthrough();
      enable_fallthrough(sub);
    }
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(an_input, an_params, an_tmax, an_guard, json);

    if (g_helly->parsed()) {
      const auto fam = convexlab::gen_helly_sequence(parse_unsigned_list(gen_u, "--u"));
      convexlab::save_set_system(gen_output, {fam.system, fam.names});
      Report rep;
      rep.add("output", gen_output);
      rep.add("ground", fam.system.ground_size);
      rep.add("members", fam.system.size());
      add_certificate(rep, convexlab::certify(fam));
      rep.print(json);
      return 0;
    }
    if (g_words->parsed()) {
      const auto fam = convexlab::gen_binary_words(gen_k);
      convexlab::save_set_system(gen_output, {fam.system, fam.names});
      Report rep;
      rep.add("output", gen_output);
      rep.add("ground", fam.system.ground_size);
      rep.add("members", fam.system.size());
      // the construction doubles the word positions: one member per letter
      rep.add("word_length", fam.word_length);
      rep.add("points", join_points(fam.s));
      std::string words;
      for (std::size_t i = 0; i < fam.s_words.size(); ++i)
        words += (i ? " " : "") + fam.s_words[i];
      rep.add("words", words);
      if (!gen_points_output.empty()) {
        convexlab::save_points(gen_points_output, fam.s);
        rep.add("points_output", gen_points_output);
      }
      add_certificate(rep, convexlab::certify(fam));
      rep.print(json);
      return 0;
    }
    if (g_shatter->parsed()) {
      const auto fam = convexlab::gen_shatter_family(parse_unsigned_list(gen_f, "--f"));
      convexlab::save_cubical_system(gen_output, {fam.system, fam.names});
      Report rep;
      rep.add("output", gen_output);
      rep.add("dims", std::to_string(fam.system.dims[0]) + "x" +
                          std::to_string(fam.system.dims[1]));
      rep.add("members", fam.system.size());
      add_certificate(rep, convexlab::certify(fam));
      rep.print(json);
      return 0;
    }
    if (g_random->parsed()) {
      Report rep;
      rep.add("output", gen_output);
      rep.add("kind", gr_kind);
      rep.add("seed", gr_seed);
      if (gr_kind == "abstract") {
        const auto fam = convexlab::gen_random_abstract(gr_ground, gr_n, gr_density, gr_seed);
        convexlab::save_set_system(gen_output, {fam.system, fam.names});
        rep.add("ground", fam.system.ground_size);
        rep.add("members", fam.system.size());
      } else if (gr_kind == "intervals") {
        const auto fam = convexlab::gen_random_intervals(gr_ground, gr_n, gr_seed);
        convexlab::save_set_system(gen_output, {fam.system, fam.names});
        rep.add("ground", fam.system.ground_size);
        rep.add("members", fam.system.size());
      } else if (gr_kind == "boxes") {
        const auto fam = convexlab::gen_random_boxes(gr_grid, gr_n, gr_seed);
        convexlab::save_cubical_system(gen_output, {fam.system, fam.names});
        rep.add("cells", fam.system.cell_count());
        rep.add("members", fam.system.size());
      } else {
        throw input_error("unknown random kind '" + gr_kind + "'");
      }
      rep.print(json);
      return 0;
    }

    if (homology->parsed()) return run_homology(ho_input, ho_subfamily, ho_h, json);
    if (shatter->parsed()) return run_shatter(sh_input, sh_h, sh_tmax, json);

    if (v_radon->parsed())
      return run_verify_corpus("radon-bound", ve_corpus, ve_tmax, ve_slack, ve_emit, json);
    if (v_levi->parsed()) return run_verify_corpus("levi", ve_corpus, ve_tmax, 1, ve_emit, json);
    if (v_growth->parsed())
      return run_verify_corpus("helly-growth", ve_corpus, ve_tmax, 1, ve_emit, json);
    if (v_minimal->parsed()) return run_verify_minimal(vm_k, vm_input, vm_points, json);

    if (probe->parsed())
      return run_probe(pr_input, pr_s, pr_k, pr_budget, pr_seed, pr_m, pr_guard, json);

    if (psi->parsed()) {
      const auto tables = tables_from_files(ps_rtable, ps_mtable, ps_d);
      Report rep;
      rep.add("b", ps_b);
      rep.add("t", ps_t);
      rep.add("psi", convexlab::psi_eval(tables, ps_b, ps_t));
      rep.print(json);
      return 0;
    }
  } catch (const size_error& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 3;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
