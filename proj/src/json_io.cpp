#include "skmv/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <utility>

namespace skmv {

namespace {

json int_array(const IntVec& v) { return json(v); }

/// Matrix labels [[i,j]] of a monomial's generators, in stored (sorted) order.
json monomial_labels_json(const Monomial& m) {
  json out = json::array();
  for (const auto& [a, b] : m.gens) out.push_back(json::array({a, b + 1}));
  return out;
}

json interval_json(const Interval& c) { return json::array({c.first, c.second}); }

json hall_object_json(const HallObject& o) {
  json out = json::array();
  for (const auto& part : o.parts) out.push_back(interval_json(part));
  return out;
}

json hall_element_terms(const HallElement& e) {
  json terms = json::array();
  for (const auto& [obj, coeff] : e) {
    terms.push_back(json{{"coeff", coeff}, {"object", hall_object_json(obj)}});
  }
  return terms;
}

json dual_delta_terms(const std::vector<DualDeltaTerm>& ts) {
  json terms = json::array();
  for (const auto& t : ts) {
    json left = t.left ? interval_json(*t.left) : json(nullptr);
    json right = t.right ? interval_json(*t.right) : json(nullptr);
    terms.push_back(json{{"coeff", 1}, {"left", std::move(left)}, {"right", std::move(right)}});
  }
  return terms;
}

json character_quiver_json(const CharacterQuiver& q) {
  json arrows = json::array();
  for (const auto& [from, to] : q.arrows) {
    arrows.push_back(json{{"from", from}, {"to", to}});
  }
  return json{{"arrows", std::move(arrows)}, {"vertices", q.vertices}};
}

void write_document(const std::filesystem::path& file, const json& doc) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + file.string() + " for writing");
  out << doc.dump(2) << "\n";
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

}  // namespace

json weight_json(const Weight& v) { return int_array(v.coords); }

json polytope_json(const LatticePolytope& P) {
  json verts = json::array();
  for (const auto& v : P.vertices) verts.push_back(int_array(v));
  return json{{"n", P.n}, {"vertices", std::move(verts)}};
}

json chain_json(const Chain& c) {
  json verts = json::array();
  for (const auto& v : c.vertices) verts.push_back(weight_json(v));
  json arrows = json::array();
  for (const auto& a : c.arrows) {
    arrows.push_back(json{{"color", a.color}, {"from", a.from}, {"to", a.to}});
  }
  return json{{"arrows", std::move(arrows)}, {"level", c.level}, {"vertices", std::move(verts)}};
}

json quadruple_json(const Quadruple& X) {
  json face = json::array();
  for (int pos : X.face) face.push_back(pos);
  return json{{"face", std::move(face)},
              {"pi", X.pi.images()},
              {"rank", X.n},
              {"word", X.word}};
}

json gallery_steps_json(const FoldedGallery& g) {
  json steps = json::array();
  for (const auto& s : g.steps) {
    steps.push_back(json{{"folded", s.folded}, {"root", int_array(s.root.coords)}});
  }
  return steps;
}

json chains_payload(int n) {
  json list = json::array();
  for (int j = 1; j <= n; ++j) list.push_back(chain_json(chain(n, j)));
  return json{{"chains", std::move(list)}, {"n", n}};
}

json pol_payload(int n, const std::string& path_text) {
  return polytope_json(pol(parse_path(n, path_text)));
}

json minkowski_payload(int n, const std::string& path_text_a, const std::string& path_text_b) {
  const LatticePolytope P = pol(parse_path(n, path_text_a));
  const LatticePolytope Q = pol(parse_path(n, path_text_b));
  return polytope_json(minkowski(P, Q));
}

json comult_payload(int n, const std::string& monomial_text) {
  const Monomial m = parse_monomial(n, monomial_text);
  const TensorPoly d = delta(m);
  json terms = json::array();
  for (const auto& [pair, coeff] : d.terms) {
    terms.push_back(json{{"coeff", coeff},
                         {"left", monomial_labels_json(pair.first)},
                         {"right", monomial_labels_json(pair.second)}});
  }
  return json{{"n", n}, {"terms", std::move(terms)}};
}

json hall_product_payload(int n, const std::string& text_a, const std::string& text_b) {
  const HallObject A = parse_hall_object(n, text_a);
  const HallObject B = parse_hall_object(n, text_b);
  return json{{"n", n}, {"terms", hall_element_terms(hall_product(A, B))}};
}

json hall_serre_payload(int n) { return json{{"n", n}, {"serre", serre_check(n)}}; }

json hall_delta_payload(int n, const std::string& interval_text) {
  json doc;
  try {
    doc = json::parse(interval_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("interval literal is not valid JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.size() != 2 || !doc[0].is_number_integer() ||
      !doc[1].is_number_integer()) {
    throw std::invalid_argument("interval literal must be a two-integer list [h,j]");
  }
  const Interval c{doc[0].get<int>(), doc[1].get<int>()};
  return json{{"interval", interval_json(c)},
              {"n", n},
              {"terms", dual_delta_terms(dual_delta(n, c))}};
}

json gallery_payload(int n, const std::optional<std::vector<int>>& project_positions) {
  const Quadruple X = standard_quadruple(n);
  const FoldedGallery g = encode_gallery(X);
  json payload{{"character_quiver", character_quiver_json(character_quiver(X))},
               {"n", n},
               {"quadruple", quadruple_json(X)},
               {"steps", gallery_steps_json(g)}};
  if (project_positions) {
    const std::set<int> J(project_positions->begin(), project_positions->end());
    const std::set<int> F = flat_of(X, J);
    const FoldedGallery projected = project(g, F);
    json roots = json::array();
    for (const auto& r : beta_simple_roots(X, F)) roots.push_back(int_array(r.coords));
    json positions = json::array();
    for (int pos : J) positions.push_back(pos);
    json flat = json::array();
    for (int pos : F) flat.push_back(pos);
    payload["projection"] = json{{"flat", std::move(flat)},
                                 {"positions", std::move(positions)},
                                 {"quadruple", quadruple_json(decode_gallery(projected))},
                                 {"simple_roots", std::move(roots)},
                                 {"steps", gallery_steps_json(projected)}};
  }
  return payload;
}

json cluster_payload(int n) {
  if (n < 2) throw BoundsError("cluster data requires rank >= 2, got " + std::to_string(n));
  const std::vector<EdgeLabel> edges = edge_set(n);
  const std::map<EdgeLabel, LatticePolytope> polys = seed_polytopes(n);
  json edge_list = json::array();
  for (const EdgeLabel& e : edges) {
    const Weight w = e.weight(n);
    edge_list.push_back(json{{"kind", e.frozen() ? "frozen" : "mutable"},
                             {"label", weight_to_string(w)},
                             {"level", fundamental_level(w).value()},
                             {"polytope", polytope_json(polys.at(e))},
                             {"weight", weight_json(w)}});
  }
  json matrix = json::array();
  for (const IntVec& row : exchange_matrix(n)) matrix.push_back(int_array(row));
  return json{{"edges", std::move(edge_list)}, {"matrix", std::move(matrix)}, {"n", n}};
}

std::vector<std::string> write_fixtures(int n, const std::string& out_dir) {
  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;

  write_document(dir / "chains.json", chains_payload(n));
  written.push_back("chains.json");

  json fundamental = json::array();
  std::set<LatticePolytope> distinct;
  for (int j = 1; j <= n; ++j) {
    const Chain c = chain(n, j);
    for (const Weight& v : c.vertices) {
      const LatticePolytope P = pol(make_path(n, {v}));
      if (P.vertices.size() > 1) distinct.insert(P);
      fundamental.push_back(json{{"level", j},
                                 {"path", weight_to_string(v)},
                                 {"polytope", polytope_json(P)}});
    }
  }
  write_document(dir / "polytopes.json",
                 json{{"distinct_nonpoint_count", distinct.size()},
                      {"fundamental", std::move(fundamental)},
                      {"n", n}});
  written.push_back("polytopes.json");

  const json cluster_doc =
      n >= 2 ? cluster_payload(n)
             : json{{"n", n}, {"note", "seed data requires rank at least 2"}};
  write_document(dir / "cluster.json", cluster_doc);
  written.push_back("cluster.json");

  json products = json::array();
  std::vector<Interval> intervals;
  for (int h = 1; h <= n; ++h) {
    for (int j = h; j <= n; ++j) intervals.push_back({h, j});
  }
  for (const Interval& a : intervals) {
    for (const Interval& b : intervals) {
      const HallObject A = hall_object(n, {a});
      const HallObject B = hall_object(n, {b});
      products.push_back(json{{"a", hall_object_json(A)},
                              {"b", hall_object_json(B)},
                              {"terms", hall_element_terms(hall_product(A, B))}});
    }
  }
  json deltas = json::array();
  for (const Interval& c : intervals) {
    deltas.push_back(json{{"interval", interval_json(c)},
                          {"terms", dual_delta_terms(dual_delta(n, c))}});
  }
  json hall_doc{{"delta", std::move(deltas)}, {"n", n}, {"products", std::move(products)}};
  if (n >= 2) hall_doc["serre"] = serre_check(n);
  write_document(dir / "hall.json", hall_doc);
  written.push_back("hall.json");

  const std::optional<std::vector<int>> projection =
      n == 3 ? std::optional<std::vector<int>>({2, 3}) : std::nullopt;
  write_document(dir / "gallery.json", gallery_payload(n, projection));
  written.push_back("gallery.json");

  return written;
}

}  // namespace skmv
