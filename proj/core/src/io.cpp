#include "plift/io.hpp"

#include <fstream>
#include <sstream>

namespace plift {

using nlohmann::json;

const ModulePtr& Instance::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw Error(ErrorKind::UnknownModule, "no module named '" + name + "'");
  return it->second;
}

const LiftEntry& Instance::lift(const std::string& name) const {
  auto it = lifts.find(name);
  if (it == lifts.end()) throw Error(ErrorKind::UnknownLift, "no lift named '" + name + "'");
  return it->second;
}

void validate_instance(const Instance& inst) {
  if (auto d = validate_algebra(*inst.algebra)) throw Error(ErrorKind::ValidationError, "algebra: " + d->to_string());
  for (const auto& [name, m] : inst.modules)
    if (auto d = validate_module(*m)) throw Error(ErrorKind::ValidationError, "module " + name + ": " + d->to_string());
  for (const auto& [name, l] : inst.lifts)
    if (auto d = validate_lift(l.witness)) throw Error(ErrorKind::ValidationError, "lift " + name + ": " + d->to_string());
}

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing key '") + key + "'");
  return *it;
}

const json& require_array(const json& j, const std::string& where) {
  if (!j.is_array()) parse_fail(where, "expected an array");
  return j;
}

std::string require_string(const json& j, const std::string& where) {
  if (!j.is_string()) parse_fail(where, "expected a string");
  return j.get<std::string>();
}

std::size_t require_size(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) parse_fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

FieldElem require_scalar(const json& j, const PrimeField& f, const std::string& where) {
  if (j.is_number_unsigned()) return {static_cast<std::uint32_t>(j.get<std::uint64_t>() % f.modulus())};
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  parse_fail(where, "expected an integer");
}

// An entry is an array of n coefficients; a bare integer c stands for c·1.
RingElem parse_entry(const json& j, const ArtinAlgebra& r, const std::string& where) {
  if (j.is_number()) return r.from_scalar(require_scalar(j, r.field(), where));
  require_array(j, where);
  if (j.size() != r.dim()) parse_fail(where, "expected " + std::to_string(r.dim()) + " coefficients");
  RingElem e = r.zero();
  for (std::size_t l = 0; l < r.dim(); ++l) e.coeffs[l] = require_scalar(j[l], r.field(), where + "[" + std::to_string(l) + "]");
  return e;
}

MatrixR parse_matrix(const json& j, const AlgebraPtr& r, std::size_t rows, std::size_t cols, const std::string& where) {
  require_array(j, where);
  if (j.size() != rows) parse_fail(where, "expected " + std::to_string(rows) + " rows");
  MatrixR m(r, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_where = where + "[" + std::to_string(i) + "]";
    require_array(j[i], row_where);
    if (j[i].size() != cols) parse_fail(row_where, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m.set(i, c, parse_entry(j[i][c], *r, row_where + "[" + std::to_string(c) + "]"));
  }
  return m;
}

AlgebraPtr parse_algebra(const json& j, const PrimeField& field) {
  const std::string where = "algebra";
  const json& basis = require_array(require(j, "basis", where), where + ".basis");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < basis.size(); ++i) names.push_back(require_string(basis[i], where + ".basis[" + std::to_string(i) + "]"));
  const std::size_t n = names.size();
  if (n == 0) parse_fail(where + ".basis", "empty basis");

  std::vector<FieldElem> table(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    table[(0 * n + i) * n + i] = field.one();
    table[(i * n + 0) * n + i] = field.one();
  }
  if (j.contains("mult")) {
    const json& mult = require_array(j["mult"], where + ".mult");
    for (std::size_t t = 0; t < mult.size(); ++t) {
      const std::string w = where + ".mult[" + std::to_string(t) + "]";
      require_array(mult[t], w);
      if (mult[t].size() != 3) parse_fail(w, "expected [i, j, coefficients]");
      const std::size_t a = require_size(mult[t][0], w + "[0]");
      const std::size_t b = require_size(mult[t][1], w + "[1]");
      if (a >= n || b >= n) parse_fail(w, "basis index out of range");
      const json& coeffs = require_array(mult[t][2], w + "[2]");
      if (coeffs.size() != n) parse_fail(w + "[2]", "expected " + std::to_string(n) + " coefficients");
      for (std::size_t l = 0; l < n; ++l) table[(a * n + b) * n + l] = require_scalar(coeffs[l], field, w + "[2]");
    }
  }
  try {
    return std::make_shared<const ArtinAlgebra>(field, names, table);
  } catch (const Error& e) {
    parse_fail(where, e.what());
  }
}

QuiverPtr parse_quiver(const json& j, const PrimeField& field) {
  const std::string where = "quiver";
  const json& vs = require_array(require(j, "vertices", where), where + ".vertices");
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(require_string(vs[i], where + ".vertices[" + std::to_string(i) + "]"));
  auto vertex = [&](const json& v, const std::string& w) {
    const std::string label = require_string(v, w);
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i] == label) return i;
    parse_fail(w, "unknown vertex '" + label + "'");
  };

  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    const json& as = require_array(j["arrows"], where + ".arrows");
    for (std::size_t i = 0; i < as.size(); ++i) {
      const std::string w = where + ".arrows[" + std::to_string(i) + "]";
      arrows.push_back(Arrow{require_string(require(as[i], "label", w), w + ".label"),
                             vertex(require(as[i], "source", w), w + ".source"),
                             vertex(require(as[i], "target", w), w + ".target")});
    }
  }

  // Paths are resolved against a relation-free copy first.
  std::unique_ptr<QuiverPresentation> bare;
  try {
    bare = std::make_unique<QuiverPresentation>(field, vertices, arrows, std::vector<Relation>{});
  } catch (const Error& e) {
    parse_fail(where, e.what());
  }
  std::vector<Relation> relations;
  if (j.contains("relations")) {
    const json& rs = require_array(j["relations"], where + ".relations");
    for (std::size_t r = 0; r < rs.size(); ++r) {
      const std::string rw = where + ".relations[" + std::to_string(r) + "]";
      require_array(rs[r], rw);
      Relation rel;
      for (std::size_t t = 0; t < rs[r].size(); ++t) {
        const std::string w = rw + "[" + std::to_string(t) + "]";
        const json& term = rs[r][t];
        const json& labels = require_array(require(term, "path", w), w + ".path");
        std::vector<std::string> names;
        for (const auto& l : labels) names.push_back(require_string(l, w + ".path"));
        std::optional<std::size_t> start;
        if (term.contains("vertex")) start = vertex(term["vertex"], w + ".vertex");
        const FieldElem coeff = term.contains("coeff") ? require_scalar(term["coeff"], field, w + ".coeff") : field.one();
        try {
          rel.terms.push_back(RelationTerm{coeff, bare->path_from_labels(names, start)});
        } catch (const Error& e) {
          parse_fail(w, e.what());
        }
      }
      relations.push_back(std::move(rel));
    }
  }
  try {
    return std::make_shared<const QuiverPresentation>(field, vertices, arrows, relations);
  } catch (const Error& e) {
    parse_fail(where, e.what());
  }
}

ModulePtr parse_module(const json& j, const Instance& inst, const std::string& where) {
  const std::string over = require_string(require(j, "over", where), where + ".over");
  AlgebraPtr r;
  if (over == "k") r = inst.residue_field;
  else if (over == "R") r = inst.algebra;
  else parse_fail(where + ".over", "expected \"k\" or \"R\"");

  const QuiverPresentation& q = *inst.quiver;
  const json& rs = require_array(require(j, "ranks", where), where + ".ranks");
  if (rs.size() != q.vertex_count()) parse_fail(where + ".ranks", "expected one rank per vertex");
  std::vector<std::size_t> ranks;
  for (std::size_t x = 0; x < rs.size(); ++x) ranks.push_back(require_size(rs[x], where + ".ranks"));

  const json empty = json::object();
  const json& maps = j.contains("maps") ? j["maps"] : empty;
  if (!maps.is_object()) parse_fail(where + ".maps", "expected an object");
  for (const auto& [label, _] : maps.items())
    if (!q.arrow_index(label)) parse_fail(where + ".maps", "unknown arrow '" + label + "'");
  std::vector<MatrixR> arrow_maps;
  for (const Arrow& a : q.arrows()) {
    const std::size_t rows = ranks[a.target], cols = ranks[a.source];
    auto it = maps.find(a.label);
    if (it == maps.end()) {
      if (rows && cols) parse_fail(where + ".maps", "missing arrow '" + a.label + "'");
      arrow_maps.emplace_back(r, rows, cols);
      continue;
    }
    arrow_maps.push_back(parse_matrix(*it, r, rows, cols, where + ".maps." + a.label));
  }
  return make_module(r, inst.quiver, ranks, std::move(arrow_maps));
}

LiftEntry parse_lift(const json& j, const Instance& inst, const std::string& where) {
  LiftEntry e;
  e.lift = require_string(require(j, "lift", where), where + ".lift");
  e.base = require_string(require(j, "base", where), where + ".base");
  auto find = [&](const std::string& name, const std::string& w) {
    auto it = inst.modules.find(name);
    if (it == inst.modules.end()) parse_fail(w, "unknown module '" + name + "'");
    return it->second;
  };
  e.witness.lift = find(e.lift, where + ".lift");
  e.witness.base = find(e.base, where + ".base");
  const json& phi = require(j, "phi", where);
  if (!phi.is_object()) parse_fail(where + ".phi", "expected an object keyed by vertex");
  const QuiverPresentation& q = *inst.quiver;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    const std::string& v = q.vertices()[x];
    const std::size_t rows = e.witness.base->rank(x), cols = e.witness.lift->rank(x);
    auto it = phi.find(v);
    if (it == phi.end()) {
      if (rows || cols) parse_fail(where + ".phi", "missing vertex '" + v + "'");
      e.witness.phi.emplace_back(q.field(), rows, cols);
      continue;
    }
    e.witness.phi.push_back(parse_matrix(*it, inst.residue_field, rows, cols, where + ".phi." + v).residue());
  }
  return e;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw Error(ErrorKind::ParseError, "empty input");
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON");
  }
  if (!j.is_object()) parse_fail("top level", "expected an object");
  const json& schema = require(j, "schema", "top level");
  if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion) {
    parse_fail("schema", "unsupported schema version, expected " + std::to_string(kSchemaVersion));
  }
  const json& fj = require(j, "field", "top level");
  const std::size_t p = require_size(require(fj, "p", "field"), "field.p");
  if (p > 0x7fffffffu || !is_prime(p)) parse_fail("field.p", std::to_string(p) + " is not a supported prime");
  const PrimeField field(static_cast<std::uint32_t>(p));

  Instance inst;
  inst.algebra = parse_algebra(require(j, "algebra", "top level"), field);
  inst.residue_field = std::make_shared<const ArtinAlgebra>(ArtinAlgebra::field_algebra(field));
  inst.quiver = parse_quiver(require(j, "quiver", "top level"), field);

  if (auto d = validate_algebra(*inst.algebra)) throw Error(ErrorKind::ValidationError, "algebra: " + d->to_string());

  try {
    if (j.contains("modules")) {
      if (!j["modules"].is_object()) parse_fail("modules", "expected an object");
      for (const auto& [name, m] : j["modules"].items()) inst.modules.emplace(name, parse_module(m, inst, "modules." + name));
    }
    if (j.contains("lifts")) {
      if (!j["lifts"].is_object()) parse_fail("lifts", "expected an object");
      for (const auto& [name, l] : j["lifts"].items()) inst.lifts.emplace(name, parse_lift(l, inst, "lifts." + name));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, e.what());
  }
  validate_instance(inst);
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

json matrix_to_json(const MatrixR& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      json entry = json::array();
      for (FieldElem v : m.at(i, c).coeffs) entry.push_back(v.value);
      row.push_back(std::move(entry));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_to_json(const MatrixK& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).value);
    rows.push_back(std::move(row));
  }
  return rows;
}

json module_to_json(const RepModule& m) {
  json maps = json::object();
  const QuiverPresentation& q = *m.quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) maps[q.arrow(a).label] = matrix_to_json(m.arrow_map(a));
  return json{{"ranks", m.ranks()}, {"maps", std::move(maps)}};
}

json instance_to_json(const Instance& inst) {
  const ArtinAlgebra& r = *inst.algebra;
  const std::size_t n = r.dim();
  json mult = json::array();
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) {
      json coeffs = json::array();
      bool nonzero = false;
      for (std::size_t l = 0; l < n; ++l) {
        coeffs.push_back(r.structure_constant(i, j, l).value);
        nonzero = nonzero || r.structure_constant(i, j, l).value != 0;
      }
      if (nonzero) mult.push_back(json::array({i, j, std::move(coeffs)}));
    }

  const QuiverPresentation& q = *inst.quiver;
  json arrows = json::array();
  for (const Arrow& a : q.arrows())
    arrows.push_back({{"label", a.label}, {"source", q.vertices()[a.source]}, {"target", q.vertices()[a.target]}});
  json relations = json::array();
  for (const Relation& rel : q.relations()) {
    json terms = json::array();
    for (const RelationTerm& t : rel.terms) {
      json labels = json::array();
      for (std::size_t a : t.path.arrows) labels.push_back(q.arrow(a).label);
      json term{{"coeff", t.coeff.value}, {"path", std::move(labels)}};
      if (t.path.arrows.empty()) term["vertex"] = q.vertices()[t.path.start];
      terms.push_back(std::move(term));
    }
    relations.push_back(std::move(terms));
  }

  json modules = json::object();
  for (const auto& [name, m] : inst.modules) {
    json mj = module_to_json(*m);
    mj["over"] = m->algebra()->is_field() ? "k" : "R";
    modules[name] = std::move(mj);
  }
  json lifts = json::object();
  for (const auto& [name, l] : inst.lifts) {
    json phi = json::object();
    for (std::size_t x = 0; x < q.vertex_count(); ++x) phi[q.vertices()[x]] = matrix_to_json(l.witness.phi[x]);
    lifts[name] = {{"lift", l.lift}, {"base", l.base}, {"phi", std::move(phi)}};
  }

  return json{{"schema", kSchemaVersion},
              {"field", {{"p", r.field().modulus()}}},
              {"algebra", {{"basis", r.basis_names()}, {"mult", std::move(mult)}}},
              {"quiver", {{"vertices", q.vertices()}, {"arrows", std::move(arrows)}, {"relations", std::move(relations)}}},
              {"modules", std::move(modules)},
              {"lifts", std::move(lifts)}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::string save_instance(const Instance& inst) { return dump_json(instance_to_json(inst)); }

}  // namespace plift
