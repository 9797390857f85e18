#include "clonewt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "clonewt/attack.hpp"
#include "clonewt/audit.hpp"
#include "clonewt/caps.hpp"
#include "clonewt/cliques.hpp"
#include "clonewt/entropy.hpp"
#include "clonewt/errors.hpp"
#include "clonewt/euclid_sharing.hpp"
#include "clonewt/filtration.hpp"
#include "clonewt/graph_sharing.hpp"
#include "clonewt/metric_weighting.hpp"

namespace clonewt::cli {

using nlohmann::ordered_json;

namespace {

struct Common {
  std::string input;
  std::string output;
  std::string format = "json";
};

struct Weighting {
  std::string rule = "cu";
  double alpha = 1.0;
  std::string nu = "uniform";
  double entropy_tol = 1e-8;
  std::optional<std::size_t> clique_cap;
  std::optional<std::size_t> partition_cap;
};

void add_input(CLI::App* cmd, Common& c, const std::string& what) {
  cmd->add_option("--input,-i", c.input, what)->required();
}

void add_output(CLI::App* cmd, Common& c) {
  cmd->add_option("--output,-o", c.output, "write the document to this file instead of stdout");
}

void add_caps(CLI::App* cmd, Weighting& w) {
  cmd->add_option("--clique-cap", w.clique_cap, "maximal-clique enumeration cap");
  cmd->add_option("--partition-cap", w.partition_cap, "largest graph for clique-partition enumeration");
}

void add_weighting(CLI::App* cmd, Weighting& w) {
  cmd->add_option("--rule", w.rule, "graph rule, e.g. cu, mcca, lift:uniform, smooth:cu")->capture_default_str();
  cmd->add_option("--alpha", w.alpha, "disambiguation radius")->capture_default_str();
  cmd->add_option("--nu", w.nu, "radius density: uniform or pwl:r=g,...;bar=B")->capture_default_str();
  cmd->add_option("--entropy-tol", w.entropy_tol, "entropy solver tolerance")->capture_default_str();
  add_caps(cmd, w);
}

RuleOptions rule_options(const Weighting& w) {
  const Caps caps = Caps::from_environment();
  RuleOptions o;
  o.entropy_tol = w.entropy_tol;
  o.clique_cap = w.clique_cap.value_or(caps.max_cliques);
  o.partition_cap = w.partition_cap.value_or(caps.partition_vertices);
  return o;
}

RulePtr build_rule(const Weighting& w) { return make_rule(w.rule, rule_options(w)); }

MetricWeighting build_weighting(const Weighting& w) {
  if (!(w.alpha > 0.0)) {
    throw ValidationError("--alpha must be positive");
  }
  return MetricWeighting{build_rule(w), Density::parse(w.nu, w.alpha)};
}

ordered_json value_json(const WeightVector& w, std::size_t i) {
  if (w.is_exact()) {
    return to_string(w.rational(i));
  }
  return w[i];
}

ordered_json estimate_json(const Estimate& e) { return ordered_json{{"value", e.value}, {"half_width", e.half_width}}; }

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output);
  if (!file) {
    throw ValidationError("cannot write " + c.output);
  }
  file << text;
}

void emit_json(const Common& c, const ordered_json& doc, std::ostream& out) { emit(c, doc.dump(2) + "\n", out); }

std::size_t element_index(const MetricInstance& inst, const std::string& name) {
  if (auto found = inst.find(name)) {
    return *found;
  }
  if (!name.empty() && std::all_of(name.begin(), name.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    const std::size_t i = std::stoull(name);
    if (i < inst.size()) {
      return i;
    }
  }
  throw ValidationError("unknown element '" + name + "'");
}

std::string vertex_name(const Graph& g, std::size_t v) { return g.label(v); }

ordered_json tally_json(const PropertyTally& t) {
  ordered_json j{{"name", t.name}, {"cases", t.cases}, {"violations", t.violations}};
  j["worst_slack"] = t.worst_slack;
  if (!t.witness.empty()) {
    j["witness"] = t.witness;
  }
  return j;
}

std::vector<int> parse_axioms(const std::string& text) {
  std::vector<int> axioms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item != "1" && item != "2" && item != "3" && item != "4") {
      throw ValidationError("--axioms takes a comma-separated subset of 1,2,3,4");
    }
    axioms.push_back(item[0] - '0');
  }
  if (axioms.empty()) {
    throw ValidationError("--axioms is empty");
  }
  return axioms;
}

}  // namespace

ordered_json weights_document(double alpha, const std::string& rule, const std::string& nu,
                              const std::vector<std::string>& labels, const WeightVector& w) {
  ordered_json doc;
  doc["alpha"] = alpha;
  doc["rule"] = rule;
  doc["nu"] = nu;
  doc["exact"] = w.is_exact();
  ordered_json values = ordered_json::object();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    values[labels[i]] = value_json(w, i);
  }
  doc["weights"] = std::move(values);
  return doc;
}

WeightsDocument parse_weights_document(const ordered_json& doc) {
  WeightsDocument out;
  if (!doc.is_object() || !doc.contains("weights") || !doc["weights"].is_object()) {
    throw ValidationError("weights document needs a \"weights\" object");
  }
  out.alpha = doc.value("alpha", 0.0);
  out.rule = doc.value("rule", std::string{});
  std::vector<Rational> exact;
  std::vector<double> approx;
  bool all_strings = true;
  for (const auto& [label, value] : doc["weights"].items()) {
    out.labels.push_back(label);
    if (value.is_string()) {
      const Rational q = parse_rational(value.get<std::string>());
      exact.push_back(q);
      approx.push_back(to_double(q));
    } else if (value.is_number()) {
      all_strings = false;
      approx.push_back(value.get<double>());
    } else {
      throw ValidationError("weight of '" + label + "' must be a number or a \"p/q\" string");
    }
  }
  out.weights = all_strings ? WeightVector::exact(std::move(exact)) : WeightVector::approx(std::move(approx));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clone-robust weighting of pseudo-metric spaces and graphs", "clonewt"};
  app.require_subcommand(1);

  // weigh
  Common weigh_io;
  Weighting weigh_cfg;
  bool weigh_exact = false;
  auto* weigh = app.add_subcommand("weigh", "weights of every element of a metric instance");
  add_input(weigh, weigh_io, "instance file (JSON or CSV matrix)");
  add_weighting(weigh, weigh_cfg);
  weigh->add_flag("--exact", weigh_exact, "rational arithmetic (exact rules only)");
  weigh->add_option("--format", weigh_io.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_output(weigh, weigh_io);

  // graph
  Common graph_io;
  double graph_radius = 0.0;
  auto* graph = app.add_subcommand("graph", "neighborhood graph of an instance at one radius");
  add_input(graph, graph_io, "instance file");
  graph->add_option("--radius,-r", graph_radius, "edge when d(x, y) <= radius")->required();
  graph->add_option("--format", graph_io.format, "edges or json")->check(CLI::IsMember({"edges", "json"}));
  graph_io.format = "edges";
  add_output(graph, graph_io);

  // cliques
  Common cliques_io;
  Weighting cliques_cfg;
  auto* cliques = app.add_subcommand("cliques", "maximal cliques of an edge-list graph");
  add_input(cliques, cliques_io, "edge-list file");
  add_caps(cliques, cliques_cfg);
  add_output(cliques, cliques_io);

  // share
  Common share_io;
  std::string share_family = "gr";
  std::optional<double> share_radius;
  Weighting share_cfg;
  McConfig share_mc;
  std::optional<std::uint64_t> share_seed;
  std::optional<std::string> share_remove;
  auto* share = app.add_subcommand("share", "sharing coefficients of the Euclidean ball weightings");
  add_input(share, share_io, "point instance file");
  share->add_option("--family", share_family, "gr (fixed radius) or fnu (density over radii)")
      ->check(CLI::IsMember({"gr", "fnu"}));
  share->add_option("--r", share_radius, "ball radius for gr");
  share->add_option("--alpha", share_cfg.alpha, "support of the radius density for fnu");
  share->add_option("--nu", share_cfg.nu, "radius density for fnu");
  share->add_option("--samples", share_mc.samples, "Monte-Carlo samples (dimension >= 2)")->capture_default_str();
  share->add_option("--seed", share_seed, "Monte-Carlo seed (required in dimension >= 2)");
  share->add_option("--threads", share_mc.threads, "worker threads")->capture_default_str();
  share->add_option("--remove", share_remove, "also report the removal effect of this element (gr)");
  add_output(share, share_io);

  // audit
  auto* audit = app.add_subcommand("audit", "property audits; exit 2 when violations are found");
  audit->require_subcommand(0, 1);
  Common axioms_io;
  Weighting axioms_cfg;
  std::string axioms_list = "1,2,3,4";
  audit->add_option("--input,-i", axioms_io.input, "edge-list graph for the sharing axioms");
  audit->add_option("--rule", axioms_cfg.rule, "graph rule")->capture_default_str();
  audit->add_option("--axioms", axioms_list, "subset of 1,2,3,4")->capture_default_str();
  audit->add_option("--entropy-tol", axioms_cfg.entropy_tol, "entropy solver tolerance");
  add_caps(audit, axioms_cfg);
  add_output(audit, axioms_io);

  Weighting metric_cfg;
  MetricSuiteConfig metric_suite;
  std::string metric_report;
  auto* metric = audit->add_subcommand("metric", "positivity, symmetry, clone fairness, locality, continuity");
  add_weighting(metric, metric_cfg);
  metric->add_option("--seeds", metric_suite.instances, "number of seeded instances")->capture_default_str();
  metric->add_option("--seed", metric_suite.seed, "base seed")->capture_default_str();
  metric->add_option("--max-n", metric_suite.max_n, "largest instance")->capture_default_str();
  metric->add_option("--report", metric_report, "write the full report here");

  Weighting gsuite_cfg;
  GraphSuiteConfig gsuite;
  std::string gsuite_report;
  auto* gsuite_cmd = audit->add_subcommand("graph", "symmetry and clone-removal locality on random graphs");
  gsuite_cmd->add_option("--rule", gsuite_cfg.rule, "graph rule")->capture_default_str();
  gsuite_cmd->add_option("--entropy-tol", gsuite_cfg.entropy_tol, "entropy solver tolerance");
  add_caps(gsuite_cmd, gsuite_cfg);
  gsuite_cmd->add_option("--seeds", gsuite.graphs, "number of seeded graphs")->capture_default_str();
  gsuite_cmd->add_option("--seed", gsuite.seed, "base seed")->capture_default_str();
  gsuite_cmd->add_option("--max-vertices", gsuite.max_vertices, "largest graph")->capture_default_str();
  gsuite_cmd->add_option("--tol", gsuite.float_tol, "comparison tolerance for floating rules")
      ->capture_default_str();
  gsuite_cmd->add_option("--report", gsuite_report, "write the full report here");

  std::string demo_report;
  auto* demo = audit->add_subcommand("demo", "symmetry plus strong locality on the spider graph");
  demo->add_option("--report", demo_report, "write the trace here");

  std::string conj_target = "mcc_axiom2";
  std::size_t conj_budget = 1000;
  std::uint64_t conj_seed = 0;
  std::vector<std::string> conj_rules;
  std::string conj_report;
  auto* conj = audit->add_subcommand("conjecture", "random search for sharing-axiom counterexamples");
  conj->add_option("--target", conj_target, "mcc_axiom2 or entropy_negative_chi")
      ->check(CLI::IsMember({"mcc_axiom2", "entropy_negative_chi"}))
      ->capture_default_str();
  conj->add_option("--budget", conj_budget, "graphs to test")->capture_default_str();
  conj->add_option("--seed", conj_seed, "base seed")->capture_default_str();
  conj->add_option("--rule", conj_rules, "rules to test (repeatable)");
  conj->add_option("--report", conj_report, "write the findings here");

  // attack
  Common attack_io;
  Weighting attack_cfg;
  AttackConfig attack_conf;
  std::string attack_target;
  std::optional<std::uint64_t> attack_seed;
  auto* attack = app.add_subcommand("attack", "inject clones of one element and measure weight drift");
  add_input(attack, attack_io, "instance file");
  add_weighting(attack, attack_cfg);
  attack->add_option("--target", attack_target, "label (or index) of the cloned element")->required();
  attack->add_option("--clones,-k", attack_conf.clones, "number of clones")->capture_default_str();
  attack->add_option("--eps", attack_conf.eps, "clone distance")->capture_default_str();
  attack->add_option("--seed", attack_seed, "seed for clone placement (required when eps > 0)");
  add_output(attack, attack_io);

  // entropy
  Common entropy_io;
  Weighting entropy_cfg;
  auto* entropy = app.add_subcommand("entropy", "entropy-maximizing graph weights");
  add_input(entropy, entropy_io, "edge-list file");
  entropy->add_option("--tol", entropy_cfg.entropy_tol, "solver tolerance")->capture_default_str();
  entropy->add_option("--partition-cap", entropy_cfg.partition_cap, "largest graph for partition enumeration");
  add_output(entropy, entropy_io);

  // sample
  Common sample_io;
  Weighting sample_cfg;
  std::size_t sample_k = 1;
  std::optional<std::uint64_t> sample_seed;
  auto* sample = app.add_subcommand("sample", "draw elements according to their weights");
  add_input(sample, sample_io, "instance file");
  add_weighting(sample, sample_cfg);
  sample->add_option("--k", sample_k, "number of draws")->capture_default_str();
  sample->add_option("--seed", sample_seed, "sampling seed")->required();
  add_output(sample, sample_io);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return invalid;
  }

  try {
    if (*weigh) {
      const MetricInstance inst = load_instance_file(weigh_io.input);
      const MetricWeighting mw = build_weighting(weigh_cfg);
      const WeightVector w = evaluate_all(inst, mw, weigh_exact ? Arithmetic::exact : Arithmetic::floating);
      if (weigh_io.format == "csv") {
        std::ostringstream csv;
        csv << "label,weight\n";
        for (std::size_t i = 0; i < inst.size(); ++i) {
          csv << inst.label(i) << ',' << w.str(i) << '\n';
        }
        emit(weigh_io, csv.str(), out);
      } else {
        emit_json(weigh_io, weights_document(weigh_cfg.alpha, mw.rule->name(), mw.density.describe(),
                                             inst.labels(), w),
                  out);
      }
      return ok;
    }

    if (*graph) {
      const MetricInstance inst = load_instance_file(graph_io.input);
      const Graph g = neighborhood_graph(inst, graph_radius);
      if (graph_io.format == "edges") {
        emit(graph_io, to_edge_list(g), out);
        return ok;
      }
      ordered_json doc;
      doc["radius"] = graph_radius;
      doc["vertices"] = inst.labels();
      ordered_json edges = ordered_json::array();
      for (const auto& [u, v] : g.edges()) {
        edges.push_back({inst.label(u), inst.label(v)});
      }
      doc["edges"] = std::move(edges);
      ordered_json classes = ordered_json::array();
      for (const auto& cls : equivalence_classes(g).classes) {
        ordered_json names = ordered_json::array();
        for (std::size_t v : cls) {
          names.push_back(inst.label(v));
        }
        classes.push_back(std::move(names));
      }
      doc["classes"] = std::move(classes);
      emit_json(graph_io, doc, out);
      return ok;
    }

    if (*cliques) {
      const Graph g = load_edge_list(cliques_io.input);
      const CliqueCover cover = maximal_cliques(g, rule_options(cliques_cfg).clique_cap);
      ordered_json doc;
      ordered_json list = ordered_json::array();
      for (const auto& k : cover.as_lists()) {
        ordered_json names = ordered_json::array();
        for (std::size_t v : k) {
          names.push_back(vertex_name(g, v));
        }
        list.push_back(std::move(names));
      }
      doc["cliques"] = std::move(list);
      ordered_json membership = ordered_json::object();
      for (std::size_t v = 0; v < g.size(); ++v) {
        membership[vertex_name(g, v)] = cover.membership[v];
      }
      doc["membership"] = std::move(membership);
      emit_json(cliques_io, doc, out);
      return ok;
    }

    if (*share) {
      const MetricInstance inst = load_instance_file(share_io.input);
      if (inst.form() != MetricInstance::Form::points) {
        throw ValidationError("share needs a point instance");
      }
      if (inst.dim() >= 2) {
        if (!share_seed) {
          throw ValidationError("--seed is required for Monte-Carlo estimation (dimension >= 2)");
        }
      }
      share_mc.seed = share_seed.value_or(0);
      SharingMatrix m;
      ordered_json doc;
      doc["family"] = share_family;
      if (share_family == "gr") {
        if (!share_radius) {
          throw ValidationError("--r is required for family gr");
        }
        m = sharing_gr(inst.points(), *share_radius, share_mc);
        doc["radius"] = *share_radius;
      } else {
        if (!(share_cfg.alpha > 0.0)) {
          throw ValidationError("--alpha must be positive");
        }
        const Density density = Density::parse(share_cfg.nu, share_cfg.alpha);
        m = sharing_fnu(inst.points(), density, share_mc);
        doc["alpha"] = share_cfg.alpha;
        doc["nu"] = density.describe();
      }
      doc["labels"] = inst.labels();
      ordered_json weights = ordered_json::array();
      ordered_json priv = ordered_json::array();
      ordered_json chi = ordered_json::array();
      for (std::size_t x = 0; x < inst.size(); ++x) {
        weights.push_back(estimate_json(m.weight[x]));
        priv.push_back(estimate_json(m.private_direct[x]));
        ordered_json row = ordered_json::array();
        for (const auto& e : m.chi[x]) {
          row.push_back(estimate_json(e));
        }
        chi.push_back(std::move(row));
      }
      doc["weights"] = std::move(weights);
      doc["chi"] = std::move(chi);
      doc["private"] = std::move(priv);
      doc["union_volume"] = estimate_json(m.union_volume);
      ordered_json info{{"method", m.info.method},
                        {"samples", m.info.samples},
                        {"seed", m.info.seed},
                        {"streams", m.info.streams},
                        {"confidence", m.info.confidence}};
      if (!m.info.radius_quadrature.empty()) {
        info["radius_quadrature"] = m.info.radius_quadrature;
      }
      doc["estimator"] = std::move(info);
      if (share_remove) {
        if (share_family != "gr") {
          throw ValidationError("--remove applies to family gr");
        }
        const std::size_t x = element_index(inst, *share_remove);
        const RemovalReport r = removal_effect_gr(inst.points(), *share_radius, x, share_mc);
        ordered_json rows = ordered_json::array();
        for (const auto& row : r.rows) {
          rows.push_back({{"element", inst.label(row.y)},
                          {"after_removal", row.lhs},
                          {"predicted", row.rhs},
                          {"residual", row.residual},
                          {"half_width", row.half_width}});
        }
        doc["removal"] = {{"element", inst.label(x)}, {"eta", r.eta},          {"private_volume", r.private_volume},
                          {"rows", rows},             {"holds", r.holds},      {"monotone", r.monotone}};
      }
      emit_json(share_io, doc, out);
      return ok;
    }

    if (*audit) {
      if (*metric) {
        const MetricWeighting mw = build_weighting(metric_cfg);
        const MetricSuiteReport r = run_metric_suite(mw, metric_suite);
        ordered_json doc{{"suite", "metric"},
                         {"rule", r.rule},
                         {"alpha", metric_cfg.alpha},
                         {"nu", mw.density.describe()},
                         {"seed", metric_suite.seed},
                         {"instances", r.instances}};
        ordered_json props = ordered_json::array();
        for (const auto& t : r.properties) {
          props.push_back(tally_json(t));
        }
        doc["properties"] = std::move(props);
        doc["clean"] = r.clean();
        if (!metric_report.empty()) {
          emit_json(Common{"", metric_report, "json"}, doc, out);
        }
        out << "metric suite " << r.rule << ": " << r.instances << " instances, "
            << (r.clean() ? "no violations" : "VIOLATIONS") << "\n";
        for (const auto& t : r.properties) {
          out << "  " << t.name << ": " << t.violations << "/" << t.cases << " violations, worst slack "
              << shortest(t.worst_slack) << "\n";
        }
        return r.clean() ? ok : violations;
      }
      if (*gsuite_cmd) {
        const RulePtr rule = build_rule(gsuite_cfg);
        const GraphSuiteReport r = run_graph_suite(*rule, gsuite);
        ordered_json doc{{"suite", "graph"}, {"rule", r.rule}, {"seed", gsuite.seed}, {"graphs", r.graphs}};
        doc["properties"] = ordered_json::array(
            {tally_json(r.distribution), tally_json(r.positivity), tally_json(r.symmetry), tally_json(r.locality)});
        doc["worst_float_gap"] = r.worst_float_gap;
        doc["clean"] = r.clean();
        if (!gsuite_report.empty()) {
          emit_json(Common{"", gsuite_report, "json"}, doc, out);
        }
        out << "graph suite " << r.rule << ": " << r.graphs << " graphs, "
            << (r.clean() ? "no violations" : "VIOLATIONS") << "\n";
        for (const auto* t : {&r.distribution, &r.positivity, &r.symmetry, &r.locality}) {
          out << "  " << t->name << ": " << t->violations << "/" << t->cases << " violations\n";
          if (t->violations > 0) {
            out << "    " << t->witness << "\n";
          }
        }
        return r.clean() ? ok : violations;
      }
      if (*demo) {
        const DemoResult r = strict_locality_demo();
        ordered_json steps = ordered_json::array();
        for (const auto& s : r.steps) {
          ordered_json values = ordered_json::object();
          for (std::size_t i = 0; i < s.vertices.size(); ++i) {
            values[s.vertices[i]] = s.values[i];
          }
          steps.push_back({{"added", s.added}, {"values", values}, {"notes", s.notes}});
        }
        ordered_json doc{{"suite", "demo"},
                         {"steps", steps},
                         {"equations", r.equations},
                         {"contradiction", r.contradiction},
                         {"total_mass", r.total_mass}};
        if (!demo_report.empty()) {
          emit_json(Common{"", demo_report, "json"}, doc, out);
        }
        for (const auto& s : r.steps) {
          out << (s.added.empty() ? std::string("start") : "+" + s.added) << ":";
          for (std::size_t i = 0; i < s.vertices.size(); ++i) {
            out << ' ' << s.vertices[i] << '=' << s.values[i];
          }
          out << "\n";
          for (const auto& note : s.notes) {
            out << "    " << note << "\n";
          }
        }
        out << (r.contradiction ? "contradiction" : "consistent") << "; total mass under symmetry: " << r.total_mass
            << "\n";
        return ok;
      }
      if (*conj) {
        const ConjectureTarget target = conj_target == "mcc_axiom2" ? ConjectureTarget::mcc_axiom2
                                                                     : ConjectureTarget::entropy_negative_chi;
        std::vector<RulePtr> rules;
        for (const auto& spec : conj_rules) {
          rules.push_back(make_rule(spec));
        }
        const ConjectureFindings f = conjecture_search(target, conj_budget, conj_seed, rules);
        ordered_json witnesses = ordered_json::array();
        for (const auto& w : f.witnesses) {
          witnesses.push_back({{"rule", w.rule},
                               {"graph", w.graph},
                               {"x", w.x},
                               {"y", w.y},
                               {"chi", w.chi},
                               {"paw_class", w.paw_class}});
        }
        ordered_json doc{{"suite", "conjecture"},     {"target", conj_target},
                         {"budget", f.budget},        {"seed", f.seed},
                         {"graphs_tested", f.graphs_tested}, {"witness_count", f.witness_count},
                         {"paw_found", f.paw_found},  {"witnesses", witnesses},
                         {"summary", f.summary}};
        if (!conj_report.empty()) {
          emit_json(Common{"", conj_report, "json"}, doc, out);
        }
        out << f.summary << "\n";
        for (const auto& w : f.witnesses) {
          out << "  " << w.rule << " [" << w.graph << "] chi(" << w.x << "," << w.y << ") = " << w.chi
              << (w.paw_class ? " (paw)" : "") << "\n";
        }
        return ok;
      }

      if (axioms_io.input.empty()) {
        throw ValidationError("audit needs --input <graph.edges> or one of metric, graph, demo, conjecture");
      }
      const Graph g = load_edge_list(axioms_io.input);
      const RulePtr rule = build_rule(axioms_cfg);
      const AxiomReport r = audit_axioms(g, *rule, parse_axioms(axioms_list));
      ordered_json results = ordered_json::array();
      for (const auto& a : r.results) {
        if (!a.checked) {
          continue;
        }
        ordered_json item{{"axiom", a.axiom}, {"passed", a.passed}, {"cases", a.cases}};
        if (!a.passed) {
          ordered_json names = ordered_json::array();
          for (std::size_t v : a.witness) {
            names.push_back(vertex_name(g, v));
          }
          item["witness"] = std::move(names);
          item["detail"] = a.detail;
        }
        results.push_back(std::move(item));
      }
      ordered_json weights = ordered_json::object();
      const WeightVector w = (*rule)(g);
      for (std::size_t v = 0; v < g.size(); ++v) {
        weights[vertex_name(g, v)] = value_json(w, v);
      }
      ordered_json doc{{"rule", rule->name()}, {"weights", weights}, {"axioms", results}, {"passed", r.all_passed()}};
      emit_json(axioms_io, doc, out);
      return r.all_passed() ? ok : violations;
    }

    if (*attack) {
      const MetricInstance inst = load_instance_file(attack_io.input);
      const MetricWeighting mw = build_weighting(attack_cfg);
      if (attack_conf.eps > 0.0 && !attack_seed) {
        throw ValidationError("--seed is required when --eps > 0");
      }
      attack_conf.seed = attack_seed.value_or(0);
      attack_conf.target = element_index(inst, attack_target);
      const AttackReport r = run_attack(inst, mw, attack_conf);
      ordered_json elements = ordered_json::array();
      for (const auto& e : r.elements) {
        elements.push_back({{"label", e.label},
                            {"distance", e.distance},
                            {"far", e.far},
                            {"before", e.before},
                            {"after", e.after},
                            {"drift", e.drift},
                            {"exact_zero", e.exact_zero}});
      }
      ordered_json doc{{"rule", r.rule},
                       {"alpha", r.alpha},
                       {"target", inst.label(r.target)},
                       {"clones", r.clones},
                       {"eps", r.eps},
                       {"exact", r.exact},
                       {"elements", elements},
                       {"bound", r.bound},
                       {"max_far_drift", r.max_far_drift},
                       {"within_bound", r.within_bound},
                       {"family_before", r.family_before},
                       {"family_after", r.family_after},
                       {"uniform_family_after", r.uniform_family_after},
                       {"uniform_family_expected", r.uniform_family_expected}};
      emit_json(attack_io, doc, out);
      return ok;
    }

    if (*entropy) {
      const Graph g = load_edge_list(entropy_io.input);
      EntropyOptions options;
      options.tol = entropy_cfg.entropy_tol;
      options.partition_cap = rule_options(entropy_cfg).partition_cap;
      const EntropyResult r = entropy_weights(g, options);
      ordered_json weights = ordered_json::object();
      for (std::size_t v = 0; v < g.size(); ++v) {
        weights[vertex_name(g, v)] = r.weights[v];
      }
      ordered_json doc{{"rule", "entropy"},
                       {"tol", options.tol},
                       {"weights", weights},
                       {"graph_entropy", r.graph_entropy},
                       {"class_entropy", r.class_entropy},
                       {"level", r.level},
                       {"newton_steps", r.newton_steps}};
      emit_json(entropy_io, doc, out);
      return ok;
    }

    if (*sample) {
      const MetricInstance inst = load_instance_file(sample_io.input);
      const MetricWeighting mw = build_weighting(sample_cfg);
      const WeightVector w = evaluate_all(inst, mw);
      const std::vector<std::size_t> draws = sample_indices(w, sample_k, *sample_seed);
      ordered_json labels = ordered_json::array();
      for (std::size_t i : draws) {
        labels.push_back(inst.label(i));
      }
      ordered_json doc{{"rule", mw.rule->name()}, {"seed", *sample_seed}, {"k", sample_k}, {"samples", labels}};
      emit_json(sample_io, doc, out);
      return ok;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise with " << e.flag() << " or CLONEWT_CAPS)\n";
    return invalid;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return invalid;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << "\n";
    return invalid;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return invalid;
  }
  return invalid;
}

}  // namespace clonewt::cli
