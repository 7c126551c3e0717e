#include "permlab/serialize.hpp"

#include <algorithm>
#include <cctype>

#include "permlab/error.hpp"

namespace permlab {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::ParseError, "schema: " + what);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) schema_error(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing key '") + key + "'");
  return *it;
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) schema_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::uint64_t unsigned_of(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    schema_error(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array");
  return j;
}

std::set<std::pair<std::string, std::string>> pairs_of(const Json& j, const char* what) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& pr : array_of(j, what)) {
    if (!pr.is_array() || pr.size() != 2) schema_error(std::string(what) + " entries must be pairs");
    out.emplace(string_of(pr[0], what), string_of(pr[1], what));
  }
  return out;
}

Json pairs_to_json(const std::set<std::pair<std::string, std::string>>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back(Json::array({a, b}));
  return out;
}

// --- atom path parsing ------------------------------------------------------

class PathParser {
 public:
  PathParser(const Universe& u, std::string_view text) : u_(u), text_(text) {}

  AtomId parse() {
    const AtomId a = path();
    if (pos_ != text_.size()) fail("trailing characters");
    return a;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                "atom path '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                    what);
  }
  [[noreturn]] void missing() const { throw Error(ErrorCode::UnknownAtom, std::string(text_)); }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  AtomId path() {
    const std::size_t at = text_.find('@', pos_);
    if (at == std::string_view::npos || at == pos_) fail("expected element@level");
    const std::string_view name = text_.substr(pos_, at - pos_);
    if (name.find_first_of("[]#,") != std::string_view::npos) fail("bad element name");
    pos_ = at + 1;
    const auto level = static_cast<Level>(number());
    expect('[');
    Atom key;
    key.level = level;
    if (level == 0) {
      key.parent = kNoAtom;
      if (peek(']')) {
        expect(']');
        expect('#');
        key.index = static_cast<Index>(number());
      } else {
        key.index = static_cast<Index>(number());
        expect(']');
      }
    } else {
      key.parent = path();
      expect(']');
      expect('#');
      key.index = static_cast<Index>(number());
    }
    if (!u_.order().contains(name)) missing();
    key.element = u_.order().id(name);
    auto id = u_.find(key);
    if (!id) missing();
    return *id;
  }

  const Universe& u_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string witness_note(const Universe& u, const WitnessMap& w) {
  if (!w.stratum) return "empty: no atoms below the top stratum";
  const std::string set = "S_" + u.order().name(w.kind == WitnessKind::injection ? w.from : w.to) +
                          " ∩ A_" + std::to_string(*w.stratum);
  return (w.kind == WitnessKind::injection ? "total on " : "covers ") + set;
}

Json atom_list(const Universe& u, std::span<const AtomId> atoms) {
  Json out = Json::array();
  for (AtomId a : atoms) out.push_back(atom_path(u, a));
  return out;
}

AtomSet atom_set_from(const Universe& u, const Json& j, const char* what) {
  std::vector<AtomId> out;
  for (const auto& item : array_of(j, what)) out.push_back(parse_atom_path(u, string_of(item, what)));
  return make_atom_set(std::move(out));
}

Json cell_to_json(const Universe& u, const Cell& cell) {
  Json out;
  out["verdict"] = cell.verdict == Verdict::positive ? "positive" : "negative";
  if (cell.witness) out["witness"] = to_json(u, *cell.witness);
  if (cell.verdict == Verdict::negative) {
    Json certs = Json::array();
    for (const auto& c : cell.certificates) certs.push_back(to_json(u, c));
    out["certificates"] = std::move(certs);
  }
  return out;
}

Cell cell_from_json(const Universe& u, const Json& j) {
  Cell cell;
  const std::string verdict = string_of(member(j, "verdict"), "verdict");
  if (verdict == "positive")
    cell.verdict = Verdict::positive;
  else if (verdict == "negative")
    cell.verdict = Verdict::negative;
  else
    schema_error("unknown verdict '" + verdict + "'");
  if (j.contains("witness")) cell.witness = witness_from_json(u, j["witness"]);
  if (j.contains("certificates"))
    for (const auto& c : array_of(j["certificates"], "certificates"))
      cell.certificates.push_back(certificate_from_json(u, c));
  return cell;
}

}  // namespace

std::string to_document(const Json& j) { return j.dump(2) + "\n"; }

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // e.byte is 1-based and points one past the offending character.
    const std::size_t offset = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + e.what());
  }
}

Json to_json(const OrderSpec& spec) {
  Json out;
  out["elements"] = spec.elements;
  out["le"] = pairs_to_json(spec.le);
  out["lestar"] = pairs_to_json(spec.lestar);
  return out;
}

OrderSpec order_spec_from_json(const Json& j) {
  OrderSpec spec;
  for (const auto& e : array_of(member(j, "elements"), "elements"))
    spec.elements.push_back(string_of(e, "element"));
  spec.le = pairs_of(member(j, "le"), "le");
  spec.lestar = pairs_of(member(j, "lestar"), "lestar");
  return spec;
}

OrderSpec parse_order_spec(std::string_view text) {
  return order_spec_from_json(parse_document(text));
}

std::string atom_path(const Universe& u, AtomId a) {
  const Atom& x = u.atom(a);
  const std::string& name = u.order().name(x.element);
  if (x.is_base()) return name + "@0[" + std::to_string(x.index) + "]";
  return name + "@" + std::to_string(x.level) + "[" + atom_path(u, x.parent) + "]#" +
         std::to_string(x.index);
}

AtomId parse_atom_path(const Universe& u, std::string_view text) {
  return PathParser(u, text).parse();
}

Json cycles_to_json(const Universe& u, const Cycles& cycles) {
  Json out = Json::array();
  for (const auto& cycle : cycles) out.push_back(atom_list(u, cycle));
  return out;
}

Cycles cycles_from_json(const Universe& u, const Json& j) {
  Cycles out;
  for (const auto& cycle : array_of(j, "permutation")) {
    std::vector<AtomId> ids;
    for (const auto& item : array_of(cycle, "cycle"))
      ids.push_back(parse_atom_path(u, string_of(item, "cycle entry")));
    out.push_back(std::move(ids));
  }
  return out;
}

Json to_json(const Universe& u, const WitnessMap& w) {
  Json out;
  out["kind"] = w.kind == WitnessKind::injection ? "injection" : "partial-surjection";
  out["from"] = u.order().name(w.from);
  out["to"] = u.order().name(w.to);
  out["stratum"] = w.stratum ? Json(*w.stratum) : Json(nullptr);
  out["note"] = witness_note(u, w);
  Json pairs = Json::array();
  for (const auto& [a, b] : w.pairs) pairs.push_back(Json::array({atom_path(u, a), atom_path(u, b)}));
  out["pairs"] = std::move(pairs);
  return out;
}

WitnessMap witness_from_json(const Universe& u, const Json& j) {
  WitnessMap w;
  const std::string kind = string_of(member(j, "kind"), "kind");
  if (kind == "injection")
    w.kind = WitnessKind::injection;
  else if (kind == "partial-surjection")
    w.kind = WitnessKind::partial_surjection;
  else
    schema_error("unknown witness kind '" + kind + "'");
  w.from = u.order().id(string_of(member(j, "from"), "from"));
  w.to = u.order().id(string_of(member(j, "to"), "to"));
  const Json& stratum = member(j, "stratum");
  if (!stratum.is_null()) w.stratum = static_cast<Level>(unsigned_of(stratum, "stratum"));
  for (const auto& pr : array_of(member(j, "pairs"), "pairs")) {
    if (!pr.is_array() || pr.size() != 2) schema_error("pairs entries must be pairs");
    w.pairs.emplace_back(parse_atom_path(u, string_of(pr[0], "pair")),
                         parse_atom_path(u, string_of(pr[1], "pair")));
  }
  return w;
}

Json to_json(const Universe& u, const RefutationCertificate& cert) {
  Json out;
  out["kind"] = cert.kind == RefutationKind::no_injection ? "no-injection" : "no-surjection";
  out["p"] = u.order().name(cert.p);
  out["q"] = u.order().name(cert.q);
  out["support"] = atom_list(u, cert.support);
  out["fresh"] = atom_path(u, cert.fresh);
  Json evidence = Json::array();
  for (const auto& ev : cert.evidence) {
    Json e;
    e["atom"] = atom_path(u, ev.atom);
    e["branch"] = ev.branch == Branch::moves_fresh ? "A" : "B";
    e["permutation"] = cycles_to_json(u, ev.permutation);
    evidence.push_back(std::move(e));
  }
  out["evidence"] = std::move(evidence);
  return out;
}

RefutationCertificate certificate_from_json(const Universe& u, const Json& j) {
  RefutationCertificate cert;
  const std::string kind = string_of(member(j, "kind"), "kind");
  if (kind == "no-injection")
    cert.kind = RefutationKind::no_injection;
  else if (kind == "no-surjection")
    cert.kind = RefutationKind::no_surjection;
  else
    schema_error("unknown certificate kind '" + kind + "'");
  cert.p = u.order().id(string_of(member(j, "p"), "p"));
  cert.q = u.order().id(string_of(member(j, "q"), "q"));
  cert.support = atom_set_from(u, member(j, "support"), "support");
  cert.fresh = parse_atom_path(u, string_of(member(j, "fresh"), "fresh"));
  for (const auto& e : array_of(member(j, "evidence"), "evidence")) {
    Evidence ev;
    ev.atom = parse_atom_path(u, string_of(member(e, "atom"), "atom"));
    const std::string branch = string_of(member(e, "branch"), "branch");
    if (branch == "A")
      ev.branch = Branch::moves_fresh;
    else if (branch == "B")
      ev.branch = Branch::moves_image;
    else
      schema_error("unknown branch '" + branch + "'");
    ev.permutation = cycles_from_json(u, member(e, "permutation"));
    cert.evidence.push_back(std::move(ev));
  }
  return cert;
}

Json to_json(const EmbeddingReport& report) {
  const Universe& u = *report.universe;
  const auto& order = u.order();
  Json out;
  out["format"] = "permlab-report/1";
  out["order"] = to_json(order.to_spec());
  out["truncation"] = {{"depth", u.depth()}, {"index_budget", u.index_budget()}};
  out["support_budget"] = report.options.support_budget;
  out["max_supports"] = report.options.max_supports;
  out["seed"] = report.options.seed;
  out["sampled"] = report.sampled;
  Json le = Json::object(), lestar = Json::object();
  for (ElementId p = 0; p < order.size(); ++p)
    for (ElementId q = 0; q < order.size(); ++q) {
      le[order.name(p)][order.name(q)] = cell_to_json(u, report.le_cell(p, q));
      lestar[order.name(p)][order.name(q)] = cell_to_json(u, report.lestar_cell(p, q));
    }
  out["le"] = std::move(le);
  out["lestar"] = std::move(lestar);
  return out;
}

EmbeddingReport report_from_json(const Json& j, std::size_t size_cap) {
  if (string_of(member(j, "format"), "format") != "permlab-report/1")
    schema_error("unsupported report format");
  const DoublyOrderedSet order = validate_order(order_spec_from_json(member(j, "order")));
  const Json& trunc = member(j, "truncation");
  EmbeddingReport report;
  report.universe = build_universe(order, unsigned_of(member(trunc, "depth"), "depth"),
                                   unsigned_of(member(trunc, "index_budget"), "index_budget"),
                                   size_cap);
  report.options.support_budget = unsigned_of(member(j, "support_budget"), "support_budget");
  report.options.max_supports = unsigned_of(member(j, "max_supports"), "max_supports");
  report.options.seed = unsigned_of(member(j, "seed"), "seed");
  const Json& sampled = member(j, "sampled");
  if (!sampled.is_boolean()) schema_error("sampled must be a boolean");
  report.sampled = sampled.get<bool>();

  const Universe& u = *report.universe;
  const auto n = order.size();
  report.le.resize(n * n);
  report.lestar.resize(n * n);
  for (const auto& [matrix, cells] : {std::pair{"le", &report.le}, std::pair{"lestar", &report.lestar}})
    for (ElementId p = 0; p < n; ++p)
      for (ElementId q = 0; q < n; ++q) {
        const Json& row = member(member(j, matrix), order.name(p).c_str());
        (*cells)[p * n + q] = cell_from_json(u, member(row, order.name(q).c_str()));
      }
  return report;
}

Json to_json(const Universe& u) {
  Json out;
  out["order"] = to_json(u.order().to_spec());
  out["depth"] = u.depth();
  out["index_budget"] = u.index_budget();
  Json strata = Json::array();
  for (Level n = 0; n <= u.depth(); ++n) strata.push_back(u.stratum_size(n));
  out["strata"] = std::move(strata);
  Json atoms = Json::array();
  for (AtomId a = 0; a < u.size(); ++a) atoms.push_back(atom_path(u, a));
  out["atoms"] = std::move(atoms);
  return out;
}

}  // namespace permlab
