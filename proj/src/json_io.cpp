#include "knotdiff/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace knotdiff {

namespace {

using njson = nlohmann::ordered_json;

// desk-scale values only; refuse silently-wrapping conversions
long long as_ll(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi)
    fail(ErrorKind::internal, "integer too large for JSON emission: " + v.str());
  return v.convert_to<long long>();
}

njson rat_obj(const Rat& v) {
  njson o;
  o["num"] = as_ll(boost::multiprecision::numerator(v));
  o["den"] = as_ll(boost::multiprecision::denominator(v));
  return o;
}

njson poly_obj(const Laurent& p) {
  njson o;
  o["var"] = std::string(1, p.var());
  njson terms = njson::array();
  for (const auto& [exp, c] : p.terms()) {
    njson t = njson::array();
    t.push_back(exp);
    t.push_back(as_ll(boost::multiprecision::numerator(c)));
    t.push_back(as_ll(boost::multiprecision::denominator(c)));
    terms.push_back(std::move(t));
  }
  o["terms"] = std::move(terms);
  return o;
}

std::string render(const njson& o) { return o.dump(2) + "\n"; }

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail(ErrorKind::io, "read failure on " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::io, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(ErrorKind::io, "write failure on " + path);
}

std::string poly_to_json(const Laurent& p) { return render(poly_obj(p)); }

std::string sum_to_json(const FormalSum<ClassLabel>& s) {
  njson terms = njson::array();
  for (const auto& [cls, c] : s.terms()) {
    njson t;
    t["coeff"] = as_ll(c);
    t["basis"] = cls;
    terms.push_back(std::move(t));
  }
  njson o;
  o["terms"] = std::move(terms);
  return render(o);
}

std::string weighted_to_json(const FormalSum<WordClass>& s) {
  njson terms = njson::array();
  for (const auto& [wc, c] : s.terms()) {
    njson t;
    t["coeff"] = as_ll(c);
    t["word"] = wc.word;
    t["class"] = wc.cls;
    terms.push_back(std::move(t));
  }
  njson o;
  o["terms"] = std::move(terms);
  return render(o);
}

std::string chain_to_json(const ChainElement& c) {
  njson terms = njson::array();
  for (const auto& [wc, coeff] : c.terms.terms()) {
    njson t;
    t["coeff"] = as_ll(coeff);
    t["word"] = wc.word;
    t["class"] = wc.cls;
    terms.push_back(std::move(t));
  }
  njson o;
  o["degree"] = c.degree;
  o["terms"] = std::move(terms);
  return render(o);
}

ChainElement chain_from_json(const std::string& text) {
  njson o;
  try {
    o = njson::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorKind::malformed_entry, std::string("bad chain JSON: ") + e.what());
  }
  ChainElement c;
  try {
    c.degree = o.at("degree").get<int>();
    for (const auto& t : o.at("terms")) {
      Word w(t.at("word").get<std::string>());
      c.terms.add({w.letters(), t.at("class").get<std::string>()},
                  Int(t.at("coeff").get<long long>()));
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorKind::malformed_entry,
         std::string("chain JSON fields: ") + e.what());
  }
  if (c.degree < 0)
    fail(ErrorKind::malformed_entry, "chain degree must be nonnegative");
  check_chain(c);
  return c;
}

std::string resolve_to_json(const Diagram& d) {
  njson o;
  o["pd"] = serialize_pd(d);
  return render(o);
}

std::string vanishing_to_json(const VanishingReport& rep) {
  njson o;
  o["r"] = rep.r;
  o["order"] = rep.order;
  o["value"] = rat_obj(rep.value);
  o["status"] = rep.status == VanishStatus::pass   ? "pass"
                : rep.status == VanishStatus::fail ? "fail"
                                                   : "info";
  return render(o);
}

std::string quotient_to_json(const QuotientResult& q, int generators,
                             int higher_generators) {
  njson o;
  o["scope"] = "sampled subquotient";
  o["generators"] = generators;
  o["higher_generators"] = higher_generators;
  o["basis_size"] = q.rows;
  o["rank_span"] = q.rank_a;
  o["rank_boundaries"] = q.rank_b;
  o["rank_quotient"] = q.rank_quotient;
  njson tf = njson::array();
  for (const auto& t : q.torsion) tf.push_back(as_ll(t));
  o["torsion_factors"] = std::move(tf);
  return render(o);
}

std::string invariant_to_json(const Diagram& d, int series_order) {
  njson o;
  o["jones"] = poly_obj(jones(d));
  o["conway"] = poly_obj(conway(d));
  o["v2"] = as_ll(v2(d));
  njson series = njson::array();
  for (int n = 0; n <= series_order; ++n) {
    njson t;
    t["order"] = n;
    Rat c = jones_series_coefficient(d, n, series_order);
    t["num"] = as_ll(boost::multiprecision::numerator(c));
    t["den"] = as_ll(boost::multiprecision::denominator(c));
    series.push_back(std::move(t));
  }
  o["series"] = std::move(series);
  return render(o);
}

}  // namespace knotdiff
