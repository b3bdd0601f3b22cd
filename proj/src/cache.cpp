#include "besselzeros/cache.hpp"

#include <json.hpp>

#include "besselzeros/errors.hpp"

namespace besselzeros {

using nlohmann::json;

namespace {

json rational_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from(const json& j) {
  mpz_class num, den;
  if (num.set_str(j.at("num").get<std::string>(), 10) != 0 ||
      den.set_str(j.at("den").get<std::string>(), 10) != 0 || den <= 0) {
    throw FormatError("bad rational in cache");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

json ring_json(const RingElem& f) {
  json terms = json::array();
  for (const TermRecord& r : to_records(f)) {
    terms.push_back({{"e_sigma", r.e_sigma},
                     {"e_zeta", r.e_zeta},
                     {"e_z", r.e_z},
                     {"num", r.num},
                     {"den", r.den}});
  }
  return terms;
}

RingElem ring_from(const json& terms) {
  std::vector<TermRecord> records;
  for (const json& t : terms) {
    records.push_back({t.at("e_sigma").get<int>(), t.at("e_zeta").get<int>(), t.at("e_z").get<int>(),
                       t.at("num").get<std::string>(), t.at("den").get<std::string>()});
  }
  RingElem f = from_records(records);
  if (to_records(f) != records) throw FormatError("ring element terms not in canonical form");
  return f;
}

Family family_from(const std::string& s) {
  if (s == "standard") return Family::Standard;
  if (s == "derivative") return Family::Derivative;
  throw FormatError("unknown family '" + s + "'");
}

}  // namespace

CoefficientCache generate_cache(Family family, int max_order, std::size_t term_limit) {
  if (max_order < 1) throw DomainError("max order must be >= 1");
  UpsilonEngine engine(family, max_order, term_limit);
  CoefficientCache c;
  c.family = family;
  c.max_order = max_order;
  c.upsilon = engine.set(max_order);
  c.deriv_table = build_deriv_table(engine, max_order);
  c.a_seq = engine.a().values();
  for (int s = 1; s <= engine.lg().generated(); ++s) c.lg.push_back(engine.lg().E(s));
  return c;
}

std::string serialize_cache(const CoefficientCache& cache) {
  json root;
  root["format_version"] = cache.format_version;
  root["family"] = family_name(cache.family);
  root["max_order"] = cache.max_order;

  json a = json::array();
  for (std::size_t n = 0; n < cache.a_seq.size(); ++n) {
    json e = rational_json(cache.a_seq[n]);
    e["n"] = n + 1;
    a.push_back(e);
  }
  root["a_seq"] = a;

  json lg = json::array();
  for (std::size_t s = 0; s < cache.lg.size(); ++s) {
    json coeffs = json::array();
    const auto& cs = cache.lg[s].coeffs();
    for (std::size_t p = 0; p < cs.size(); ++p) {
      if (cs[p] == 0) continue;
      json e = rational_json(cs[p]);
      e["power"] = p;
      coeffs.push_back(e);
    }
    lg.push_back({{"s", s + 1}, {"coeffs", coeffs}});
  }
  root["lg"] = lg;

  json ups = json::array();
  for (int s = 1; s <= cache.upsilon.max_order(); ++s) {
    ups.push_back({{"s", s}, {"terms", ring_json(cache.upsilon[s])}});
  }
  root["upsilon"] = ups;

  json zeta = json::array();
  for (std::size_t k = 0; k < cache.deriv_table.zeta_derivs.size(); ++k) {
    zeta.push_back({{"k", k}, {"terms", ring_json(cache.deriv_table.zeta_derivs[k])}});
  }
  json uder = json::array();
  for (const auto& [key, f] : cache.deriv_table.ups_derivs) {
    uder.push_back({{"j", key.first}, {"k", key.second}, {"terms", ring_json(f)}});
  }
  root["deriv_table"] = {{"order", cache.deriv_table.order}, {"zeta", zeta}, {"upsilon", uder}};
  return root.dump(1) + "\n";
}

CoefficientCache parse_cache(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("cache is not valid JSON: ") + e.what());
  }
  try {
    CoefficientCache c;
    c.format_version = root.at("format_version").get<int>();
    if (c.format_version != CoefficientCache::kFormatVersion) {
      throw FormatError("unsupported cache format_version " + std::to_string(c.format_version));
    }
    c.family = family_from(root.at("family").get<std::string>());
    c.max_order = root.at("max_order").get<int>();

    for (const json& e : root.at("a_seq")) c.a_seq.push_back(rational_from(e));

    for (const json& e : root.at("lg")) {
      std::vector<Rational> coeffs;
      for (const json& t : e.at("coeffs")) {
        const auto p = t.at("power").get<std::size_t>();
        if (coeffs.size() <= p) coeffs.resize(p + 1);
        coeffs[p] = rational_from(t);
      }
      c.lg.emplace_back(std::move(coeffs));
    }

    c.upsilon.family = c.family;
    for (const json& e : root.at("upsilon")) c.upsilon.elems.push_back(ring_from(e.at("terms")));

    const json& dt = root.at("deriv_table");
    c.deriv_table.family = c.family;
    c.deriv_table.order = dt.at("order").get<int>();
    for (const json& e : dt.at("zeta")) c.deriv_table.zeta_derivs.push_back(ring_from(e.at("terms")));
    for (const json& e : dt.at("upsilon")) {
      c.deriv_table.ups_derivs.emplace(std::pair{e.at("j").get<int>(), e.at("k").get<int>()},
                                       ring_from(e.at("terms")));
    }
    return c;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed cache: ") + e.what());
  }
}

}  // namespace besselzeros
