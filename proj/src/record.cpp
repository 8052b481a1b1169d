#include "waring/record.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace waring {

namespace {

using nlohmann::json;

json number_fields(const Number& x, const char* num_key, const char* den_key) {
  json out = json::object();
  if (x.is_exact()) {
    out[num_key] = x.rational().get_num().get_str();
    out[den_key] = x.rational().get_den().get_str();
  } else {
    Complex z = x.to_complex(x.precision());
    out["re"] = z.real().to_string();
    out["im"] = z.imag().to_string();
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("record is missing '") + key + "'");
  return j.at(key);
}

std::string string_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) throw InvalidInput(std::string("record field '") + key + "' must be a string");
  return v.get<std::string>();
}

Number read_number(const json& j, const char* num_key, const char* den_key, long precision) {
  if (j.is_object() && j.contains(num_key)) {
    Integer num, den;
    if (num.set_str(string_field(j, num_key), 10) != 0 || den.set_str(string_field(j, den_key), 10) != 0)
      throw InvalidInput("malformed integer in record");
    if (den == 0) throw InvalidInput("zero denominator in record");
    return Number(Rational(num, den));
  }
  return Number(Complex(BigFloat::parse(string_field(j, "re"), precision), BigFloat::parse(string_field(j, "im"), precision)));
}

std::string format_log2(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", r);
  return buf;
}

}  // namespace

std::string render_record(const Form& f, const Decomposition& dec, const VerifyReport& report, long precision) {
  json out;
  out["form"] = render(f);
  out["degree"] = dec.degree;
  out["num_vars"] = dec.num_vars;
  out["precision_bits"] = precision;
  json terms = json::array();
  for (const auto& t : dec.terms) {
    json term = number_fields(t.coefficient, "coeff_num", "coeff_den");
    json coords = json::array();
    for (const auto& c : t.form.coords) coords.push_back(number_fields(c, "num", "den"));
    term["coords"] = std::move(coords);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  out["exact"] = dec.exact();
  double r = report.residual.log2_abs();
  out["residual_log2"] = std::isinf(r) ? std::string("-inf") : format_log2(r);
  out["algorithm_trace"] = dec.trace;
  out["bound"] = report.bound_value.get_str();
  out["verified"] = report.pass;
  return out.dump(2) + "\n";
}

Record parse_record(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed record: ") + e.what(), e.byte);
  }
  try {
    Record rec;
    rec.precision = field(j, "precision_bits").get<long>();
    if (rec.precision < kMinPrecision) throw InvalidInput("record precision is below 64 bits");
    Decomposition& dec = rec.decomposition;
    dec.degree = field(j, "degree").get<int>();
    dec.num_vars = field(j, "num_vars").get<int>();
    if (dec.num_vars < 1 || dec.degree < 0) throw InvalidInput("record has an invalid shape");
    rec.form = parse_form(string_field(j, "form"), dec.num_vars);
    for (const auto& t : field(j, "terms")) {
      Term term{read_number(t, "coeff_num", "coeff_den", rec.precision), LinearForm{}};
      for (const auto& c : field(t, "coords")) term.form.coords.push_back(read_number(c, "num", "den", rec.precision));
      if (term.form.num_vars() != dec.num_vars) throw InvalidInput("record term has the wrong number of coordinates");
      dec.terms.push_back(std::move(term));
    }
    if (j.contains("algorithm_trace")) dec.trace = j.at("algorithm_trace").get<std::vector<std::string>>();
    return rec;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed record: ") + e.what());
  }
}

}  // namespace waring
