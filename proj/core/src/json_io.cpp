#include "badseq/json_io.hpp"

#include <json.hpp>

#include "badseq/errors.hpp"

namespace badseq {

namespace {

using Json = nlohmann::ordered_json;

Json nat_to_json(const Nat& n) {
  if (n <= Nat(UINT64_MAX)) return n.convert_to<std::uint64_t>();
  return to_decimal(n);
}

Nat nat_from_json(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return Nat(j.get<std::uint64_t>());
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  throw ParseError(std::string(what) + " must be a natural number or decimal string");
}

Json capped_to_json(const CappedNat& v) {
  Json out;
  out["cap"] = nat_to_json(v.cap());
  if (v.is_overflow())
    out["overflow"] = true;
  else
    out["value"] = nat_to_json(v.value());
  return out;
}

CappedNat capped_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("cap"))
    throw ParseError("capped value must be an object with a cap");
  Nat cap = nat_from_json(j.at("cap"), "cap");
  if (j.value("overflow", false)) return CappedNat::overflow(std::move(cap));
  return CappedNat::bounded(nat_from_json(j.at("value"), "value"), std::move(cap));
}

Json param_to_json(const ParamFn& f) {
  Json out;
  switch (f.kind) {
    case ParamFn::Kind::Const:
      out["kind"] = "const";
      out["c"] = nat_to_json(f.c);
      break;
    case ParamFn::Kind::Id:
      out["kind"] = "id";
      break;
    case ParamFn::Kind::Log:
      out["kind"] = "log";
      break;
    case ParamFn::Kind::LogLog:
      out["kind"] = "loglog";
      break;
    case ParamFn::Kind::RootLog:
      out["kind"] = "rootlog";
      out["c"] = nat_to_json(f.c);
      break;
    case ParamFn::Kind::DivBy:
      out["kind"] = "div";
      out["c"] = nat_to_json(f.c);
      break;
    case ParamFn::Kind::RootLogFgh:
      out["kind"] = "rootlog-fgh";
      out["alpha"] = to_string(f.alpha);
      break;
  }
  return out;
}

ParamFn param_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("param must carry a kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "id") return ParamFn::id();
  if (kind == "log") return ParamFn::log();
  if (kind == "loglog") return ParamFn::loglog();
  if (kind == "const") return ParamFn::constant(nat_from_json(j.at("c"), "c"));
  if (kind == "rootlog") return ParamFn::rootlog(nat_from_json(j.at("c"), "c"));
  if (kind == "div") return ParamFn::div_by(nat_from_json(j.at("c"), "c"));
  if (kind == "rootlog-fgh")
    return ParamFn::rootlog_fgh(parse_ordinal(j.at("alpha").get<std::string>()));
  throw ParseError("unknown param kind '" + kind + "'");
}

Json ideal_to_json(const MonomialIdeal& ideal) {
  Json out = Json::array();
  for (const Monomial& g : ideal.gens()) {
    Json gen = Json::array();
    for (std::uint64_t e : g.exps()) gen.push_back(e);
    out.push_back(std::move(gen));
  }
  return out;
}

MonomialIdeal ideal_from_json(const Json& j, std::size_t width) {
  if (!j.is_array()) throw ParseError("ideal must be an array of monomials");
  std::vector<Monomial> gens;
  for (const Json& gen : j) {
    if (!gen.is_array() || gen.size() != width)
      throw ParseError("monomial must be an array of " + std::to_string(width) +
                       " exponents");
    std::vector<std::uint64_t> exps;
    exps.reserve(width);
    for (const Json& e : gen) {
      if (!e.is_number_unsigned()) throw ParseError("exponents must be naturals");
      exps.push_back(e.get<std::uint64_t>());
    }
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(width, std::move(gens));
}

Json parse_document(std::string_view text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("malformed JSON");
  return doc;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace

std::string write_sequence(const IdealSequence& s) {
  Json out;
  out["d"] = s.d();
  out["l"] = nat_to_json(s.l());
  out["param"] = param_to_json(s.param());
  if (s.meta()) {
    Json meta;
    meta["construction"] = s.meta()->construction;
    if (s.meta()->alpha) meta["alpha"] = to_string(*s.meta()->alpha);
    if (s.meta()->length_target) meta["target"] = capped_to_json(*s.meta()->length_target);
    meta["truncated"] = s.meta()->truncated;
    out["meta"] = std::move(meta);
  }
  Json ideals = Json::array();
  for (const MonomialIdeal& ideal : s.ideals()) ideals.push_back(ideal_to_json(ideal));
  out["ideals"] = std::move(ideals);
  return dump(out);
}

IdealSequence read_sequence(std::string_view text) {
  const Json doc = parse_document(text);
  try {
    if (!doc.is_object() || !doc.contains("d") || !doc.contains("l") ||
        !doc.contains("param") || !doc.contains("ideals"))
      throw ParseError("sequence needs d, l, param and ideals");
    const std::uint32_t d = doc.at("d").get<std::uint32_t>();
    Nat l = nat_from_json(doc.at("l"), "l");
    ParamFn param = param_from_json(doc.at("param"));
    std::optional<SequenceMeta> meta;
    if (doc.contains("meta")) {
      const Json& m = doc.at("meta");
      SequenceMeta sm;
      sm.construction = m.value("construction", std::string());
      if (m.contains("alpha")) sm.alpha = parse_ordinal(m.at("alpha").get<std::string>());
      if (m.contains("target")) sm.length_target = capped_from_json(m.at("target"));
      sm.truncated = m.value("truncated", false);
      meta = std::move(sm);
    }
    std::vector<MonomialIdeal> ideals;
    for (const Json& ideal : doc.at("ideals")) ideals.push_back(ideal_from_json(ideal, d + 2u));
    return IdealSequence(d, std::move(l), std::move(param), std::move(ideals),
                         std::move(meta));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad sequence file: ") + e.what());
  }
}

std::string write_coloring(const Coloring& c) {
  Json out;
  out["lo"] = c.lo();
  out["hi"] = c.hi();
  out["r"] = c.r();
  Json entries = Json::array();
  for (std::uint64_t x = c.lo(); x < c.hi(); ++x) {
    for (std::uint64_t y = x + 1; y <= c.hi(); ++y) {
      Json value = Json::array();
      for (std::uint64_t v : c.color(x, y)) value.push_back(v);
      entries.push_back(Json::array({x, y, std::move(value)}));
    }
  }
  out["entries"] = std::move(entries);
  return dump(out);
}

Coloring read_coloring(std::string_view text) {
  const Json doc = parse_document(text);
  try {
    const std::uint64_t lo = doc.at("lo").get<std::uint64_t>();
    const std::uint64_t hi = doc.at("hi").get<std::uint64_t>();
    const std::uint32_t r = doc.at("r").get<std::uint32_t>();
    if (hi < lo) throw ParseError("empty coloring domain");
    const std::uint64_t n = hi - lo + 1;
    if (n > 1'000'000 || r > 4096)
      throw ParseError("coloring domain or codimension out of supported range");
    std::vector<std::uint64_t> flat(n * (n - 1) / 2 * r, 0);
    std::vector<bool> seen(n * (n - 1) / 2, false);
    for (const Json& entry : doc.at("entries")) {
      if (!entry.is_array() || entry.size() != 3) throw ParseError("bad coloring entry");
      const std::uint64_t x = entry[0].get<std::uint64_t>();
      const std::uint64_t y = entry[1].get<std::uint64_t>();
      if (x < lo || y > hi || x >= y) throw ParseError("coloring entry outside domain");
      const std::uint64_t i = x - lo;
      const std::uint64_t j = y - lo;
      const std::size_t offset = i * (2 * n - i - 1) / 2 + (j - i - 1);
      if (seen[offset]) throw ParseError("duplicate coloring entry");
      seen[offset] = true;
      const Json& value = entry[2];
      if (!value.is_array() || value.size() != r)
        throw ParseError("coloring value must have r coordinates");
      for (std::uint32_t t = 0; t < r; ++t)
        flat[offset * r + t] = value[t].get<std::uint64_t>();
    }
    for (bool s : seen)
      if (!s) throw ParseError("coloring is not total on x < y");
    return Coloring(lo, hi, r, std::move(flat));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad coloring file: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(std::string("bad coloring file: ") + e.what());
  }
}

std::string write_search_result(const SearchResult& r) {
  Json out;
  if (r.value)
    out["value"] = *r.value;
  else
    out["value"] = nullptr;
  out["exhausted"] = r.exhausted;
  out["nodes"] = r.nodes;
  if (r.witness) out["witness"] = Json::parse(write_sequence(*r.witness));
  return dump(out);
}

std::string write_ramsey_result(const RamseyNumberResult& r) {
  Json out;
  if (r.number)
    out["number"] = *r.number;
  else
    out["number"] = nullptr;
  Json failing = Json::array();
  for (const auto& [R, coloring] : r.counterexamples) {
    Json item;
    item["R"] = R;
    item["counterexample"] = Json::parse(write_coloring(coloring));
    failing.push_back(std::move(item));
  }
  out["failing"] = std::move(failing);
  return dump(out);
}

std::string write_verify_report(const VerifyReport& r) {
  Json out;
  out["verdict"] = r.ok() ? "ok" : "violation";
  if (r.bad)
    out["witness"] = Json::array({r.bad->first, r.bad->second});
  else if (r.degree)
    out["witness"] = Json::array({*r.degree});
  Json checks;
  checks["bad"] = r.bad ? "violation" : "ok";
  checks["degrees"] = r.degree ? "violation" : "ok";
  checks["mode"] = r.mode == DegreeMode::PlusH ? "plus-h" : "param";
  if (r.length_ok.has_value()) {
    checks["length"] = *r.length_ok ? "ok" : "violation";
    checks["target"] = capped_to_json(*r.target);
  } else {
    checks["length"] = "skipped";
  }
  out["checks"] = std::move(checks);
  return dump(out);
}

std::string write_capped_value(const CappedNat& v) {
  Json out;
  if (v.is_overflow()) {
    out["overflow"] = true;
    out["cap"] = nat_to_json(v.cap());
  } else {
    out["value"] = nat_to_json(v.value());
  }
  return dump(out);
}

}  // namespace badseq
