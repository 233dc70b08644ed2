#ifndef MMLAB_CLI_HPP
#define MMLAB_CLI_HPP

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mmlab/mmlab.hpp"

namespace mmlab::cli {

struct Inputs {
  std::string mm, graph, matroid;
};

inline void add_inputs(CLI::App* sub, Inputs& in) {
  sub->add_option("--mm", in.mm, ".mm.json multimatroid ('-' for stdin)");
  sub->add_option("--graph", in.graph, ".graph file ('-' for stdin)");
  sub->add_option("--matroid", in.matroid, ".gfmat matrix ('-' for stdin)");
}

/// Multimatroid named by the inputs. Graphs give Z_G; matroids give Z_M,
/// or the tight 3-matroid of M when `three` is set.
inline Multimatroid resolve(const Inputs& in, bool three) {
  const int given = !in.mm.empty() + !in.graph.empty() + !in.matroid.empty();
  require(given == 1, ErrorCode::InvalidArgument, "give exactly one of --mm, --graph, --matroid");
  if (!in.mm.empty()) return load_multimatroid(in.mm);
  if (!in.graph.empty()) return z_graph(load_graph(in.graph)).z;
  const Matroid m = load_matroid(in.matroid);
  return three ? z_quaternary(m).z : z_matroid(standard_form(m));
}

inline Json transversals_json(const Carrier& c, const std::vector<ElementSet>& ts) {
  Json out = Json::array();
  for (auto t : ts) out.push_back(set_json(c, t));
  return out;
}

inline ElementSet parse_transversal(const Carrier& c, const std::string& text) {
  ElementSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) s.insert(parse_element_name(c, item));
  require(c.is_transversal(s), ErrorCode::InvalidArgument, "'" + text + "' is not a transversal");
  return s;
}

inline ElementSet slot_transversal(const Carrier& c, int slot) {
  ElementSet s;
  for (int v = 0; v < c.order(); ++v) s.insert(c.element(v, std::min(slot, c.class_size(v) - 1)));
  return s;
}

inline Json witness_json(const Carrier& c, const NearTransversalWitness& w) {
  Json raisers = Json::array();
  for (int x : w.raisers) raisers.push_back(element_name(c, x));
  return Json{{"s", set_json(c, w.s)}, {"missing_class", w.missing_class + 1}, {"raisers", raisers}};
}

inline Json matrix_rows(const FieldMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    std::string row;
    for (int col = 0; col < m.cols(); ++col) {
      if (col) row += ' ';
      row += "01ab"[m.code(r, col)];
    }
    rows.push_back(row);
  }
  return rows;
}

inline Json eval_json(const EvalReport& rep) {
  Json records = Json::array();
  for (const auto& r : rep.records) {
    Json j{{"name", r.name}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}, {"pass", r.pass}};
    if (r.odd_factor) j["odd_factor"] = to_string(*r.odd_factor);
    records.push_back(j);
  }
  return Json{{"order", rep.order}, {"ort_size", rep.ort_size}, {"records", records}, {"pass", rep.all_pass()}};
}

inline WeightAssignment parse_weights(const Multimatroid& z, const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("invalid weights JSON: ") + e.what());
  }
  require(j.is_object(), ErrorCode::ParseError, "weights are a JSON object from element name to rational");
  WeightAssignment w(static_cast<std::size_t>(z.size()));
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int e = parse_element_name(z.carrier(), it.key());
    require(it.value().is_string() || it.value().is_number_integer(), ErrorCode::ParseError,
            "weights are strings 'p/q' or integers");
    w[static_cast<std::size_t>(e)] =
        parse_rational(it.value().is_string() ? it.value().get<std::string>() : std::to_string(it.value().get<long>()));
  }
  for (int e = 0; e < z.size(); ++e)
    require(w[static_cast<std::size_t>(e)].has_value(), ErrorCode::IncompleteWeights,
            "no weight for element " + element_name(z.carrier(), e));
  return w;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

inline int error_exit(std::ostream& out, const Error& e) {
  std::string msg = e.what();
  const std::string prefix = std::string(to_string(e.code())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
  emit(out, Json{{"error", {{"code", std::string(to_string(e.code()))}, {"message", msg}}}});
  return e.is_input_error() ? 1 : 2;
}

/// Parses argv, runs one command, writes JSON to `out`. Returns the exit status.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"multimatroid toolkit", "mmlab"};
  app.require_subcommand(1);
  unsigned threads = default_threads();
  app.add_option("--threads", threads, "worker threads (default: available parallelism)")->check(CLI::PositiveNumber);

  Inputs in;
  std::string weights, x_text = "0", y_text = "0", transversal, pattern, pattern_mm, fixture_name;
  std::uint64_t seed = 1;

  auto* poly = app.add_subcommand("poly", "polynomials");
  poly->require_subcommand(1);
  auto* p_q1 = poly->add_subcommand("q1", "Q1(Z; y)");
  add_inputs(p_q1, in);
  auto* p_tr = poly->add_subcommand("transition", "weighted transition polynomial");
  add_inputs(p_tr, in);
  p_tr->add_option("--weights", weights, "JSON object: element name -> rational")->required();
  auto* p_int = poly->add_subcommand("interlace", "interlace polynomial q(G; y)");
  p_int->add_option("--graph", in.graph)->required();
  auto* p_glob = poly->add_subcommand("global", "global interlace polynomial Q(G; y)");
  p_glob->add_option("--graph", in.graph)->required();
  auto* p_br = poly->add_subcommand("bracket", "bracket polynomial b(G; y)");
  p_br->add_option("--graph", in.graph)->required();
  auto* p_td = poly->add_subcommand("tutte-diagonal", "T(M; x, x) through Q1");
  p_td->add_option("--matroid", in.matroid)->required();
  p_td->add_option("--x", x_text)->required();

  auto* c_ort = app.add_subcommand("ort", "orienting transversals");
  add_inputs(c_ort, in);
  auto* c_evals = app.add_subcommand("evals", "evaluation suite of a binary tight 3-matroid");
  add_inputs(c_evals, in);
  c_evals->add_option("--transversal", transversal, "comma-separated names, default the third slots");
  c_evals->add_option("--seed", seed);
  auto* c_tight = app.add_subcommand("tight", "multimatroid and tightness validation");
  add_inputs(c_tight, in);
  auto* c_minors = app.add_subcommand("minors", "search for a minor isomorphic to a pattern");
  add_inputs(c_minors, in);
  c_minors->add_option("--pattern", pattern, "fixture name");
  c_minors->add_option("--pattern-mm", pattern_mm, "pattern as .mm.json");
  auto* c_classify = app.add_subcommand("classify", "binary classification of a tight 3-matroid");
  add_inputs(c_classify, in);
  auto* c_tutte = app.add_subcommand("tutte", "Tutte polynomial value");
  c_tutte->add_option("--matroid", in.matroid)->required();
  c_tutte->add_option("--x", x_text)->required();
  c_tutte->add_option("--y", y_text)->required();
  auto* c_catalog = app.add_subcommand("catalog", "fixtures");
  c_catalog->require_subcommand(1);
  auto* cat_list = c_catalog->add_subcommand("list");
  auto* cat_dump = c_catalog->add_subcommand("dump");
  cat_dump->add_option("name", fixture_name)->required();
  auto* c_extend = app.add_subcommand("extend", "tight extension of a 2-matroid");
  add_inputs(c_extend, in);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (p_q1->parsed()) {
      emit(out, polynomial_json(q1(resolve(in, false))));
    } else if (p_tr->parsed()) {
      const Multimatroid z = resolve(in, false);
      emit(out, polynomial_json(transition_poly(z, parse_weights(z, weights))));
    } else if (p_int->parsed()) {
      emit(out, polynomial_json(interlace(load_graph(in.graph))));
    } else if (p_glob->parsed()) {
      emit(out, polynomial_json(global_interlace(load_graph(in.graph))));
    } else if (p_br->parsed()) {
      emit(out, polynomial_json(bracket(load_graph(in.graph))));
    } else if (p_td->parsed()) {
      const Rational x = parse_rational(x_text);
      emit(out, Json{{"value", to_string(tutte_diagonal(load_matroid(in.matroid), x))}, {"x", to_string(x)}});
    } else if (c_ort->parsed()) {
      const Multimatroid z = resolve(in, true);
      const auto ts = ort(z, threads);
      emit(out, Json{{"count", ts.size()}, {"transversals", transversals_json(z.carrier(), ts)}});
    } else if (c_evals->parsed()) {
      const Multimatroid z = resolve(in, true);
      const ElementSet t =
          transversal.empty() ? slot_transversal(z.carrier(), 2) : parse_transversal(z.carrier(), transversal);
      const EvalReport rep = eval_suite(z, t, seed);
      emit(out, eval_json(rep));
      if (!rep.all_pass()) return 2;
    } else if (c_tight->parsed()) {
      const Multimatroid z = resolve(in, false);
      const Verdict mm = is_multimatroid(z);
      const Verdict t = is_tight(z);
      Json j{{"multimatroid", mm.holds}, {"tight", t.holds}};
      if (t.witness) j["witness"] = witness_json(z.carrier(), *t.witness);
      emit(out, j);
    } else if (c_minors->parsed()) {
      const Multimatroid z = resolve(in, false);
      require(pattern.empty() != pattern_mm.empty(), ErrorCode::InvalidArgument,
              "give exactly one of --pattern, --pattern-mm");
      const Multimatroid p = pattern.empty() ? load_multimatroid(pattern_mm) : fixture(pattern);
      const auto w = has_minor(z, p);
      Json j{{"found", w.has_value()}};
      if (w) j["x"] = set_json(z.carrier(), w->x);
      emit(out, j);
    } else if (c_classify->parsed()) {
      const Multimatroid z = resolve(in, true);
      const BinaryClassification r = classify_binary_tight3(z);
      const Carrier& c = z.carrier();
      Json j{{"binary", r.binary}, {"removed", set_json(c, r.removed)}};
      j["strongly_binary"] = nullptr;
      j["h33_minor"] = nullptr;
      j["three_pair"] = nullptr;
      if (r.strongly_binary) j["strongly_binary"] = Json{{"a", matrix_rows(r.strongly_binary->a)}};
      if (r.h33_minor) j["h33_minor"] = Json{{"x", set_json(c, r.h33_minor->x)}};
      if (r.three_pair) j["three_pair"] = Json::array({set_json(c, r.three_pair->first), set_json(c, r.three_pair->second)});
      emit(out, j);
    } else if (c_tutte->parsed()) {
      const Rational x = parse_rational(x_text), y = parse_rational(y_text);
      emit(out, Json{{"value", to_string(tutte(load_matroid(in.matroid), x, y))}, {"x", to_string(x)}, {"y", to_string(y)}});
    } else if (cat_list->parsed()) {
      Json names = Json::array();
      for (const auto& f : fixtures()) names.push_back(f.name);
      emit(out, Json{{"fixtures", names}});
    } else if (cat_dump->parsed()) {
      emit(out, multimatroid_json(fixture(fixture_name), fixture_name));
    } else if (c_extend->parsed()) {
      const auto ext = tight_extension_search(resolve(in, false));
      emit(out, Json{{"extendable", ext.has_value()}, {"extension", ext ? multimatroid_json(*ext) : Json(nullptr)}});
    }
  } catch (const Error& e) {
    return error_exit(out, e);
  }
  return 0;
}

}  // namespace mmlab::cli

#endif  // MMLAB_CLI_HPP
