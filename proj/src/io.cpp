#include "msn/io.hpp"

#include <json.hpp>

namespace msn {

Rational rational_from_string(const std::string& text) {
  auto bad = [&] { return Error("malformed rational: \"" + text + "\""); };
  if (text.empty()) throw bad();
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto digits_ok = [](const std::string& s, bool sign_ok) {
    if (s.empty()) return false;
    std::size_t start = (sign_ok && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!digits_ok(num, true) || !digits_ok(den, true)) throw bad();
  BigInt n(num), d(den);
  if (d == 0) throw Error("rational with zero denominator: \"" + text + "\"");
  return Rational(n, d);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_decimal_string(const Rational& r, int places) {
  if (places < 0) throw Error("negative decimal places");
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  bool negative = num < 0;
  if (negative) num = -num;

  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  BigInt scaled = num * scale;
  BigInt q = scaled / den;
  BigInt rem = scaled % den;

  // round-half-even on the digit after the last kept place
  BigInt twice = rem * 2;
  if (twice > den || (twice == den && (q & 1) == 1)) ++q;

  std::string digits = q.str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, places + 1 - digits.size(), '0');
  std::string out;
  if (negative && q != 0) out += '-';
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - places);
  }
  return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

HighPrecisionReal to_real(const Rational& r) {
  return HighPrecisionReal(numerator(r)) / HighPrecisionReal(denominator(r));
}

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error("malformed JSON");
  return j;
}

}  // namespace

std::string network_to_json(const Cmsn& net) {
  json j;
  j["n"] = net.n;
  j["kind"] = net.kind == NetworkKind::rcmsn ? "rcmsn" : "cmsn";
  json events = json::array();
  for (const Packet& p : net.events) events.push_back({p.u, p.v});
  j["events"] = std::move(events);
  return j.dump(2) + "\n";
}

Cmsn network_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("events"))
    throw Error("NetworkFile needs \"n\" and \"events\"");
  Cmsn net;
  if (!j["n"].is_number_integer()) throw Error("\"n\" must be an integer");
  net.n = j["n"].get<int>();
  std::string kind = j.value("kind", "cmsn");
  if (kind == "rcmsn")
    net.kind = NetworkKind::rcmsn;
  else if (kind == "cmsn")
    net.kind = NetworkKind::cmsn;
  else
    throw Error("\"kind\" must be \"rcmsn\" or \"cmsn\"");
  if (!j["events"].is_array()) throw Error("\"events\" must be an array of pairs");
  for (const auto& e : j["events"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw Error("each event must be a pair of sensor ids");
    net.events.push_back(Packet{e[0].get<int>(), e[1].get<int>()});
  }
  validate(net);
  return net;
}

std::string arrangement_to_json(const Arrangement& arr) {
  json lines = json::array();
  for (const Line& line : arr.lines) {
    json entry;
    entry["slope"] = line.vertical() ? std::string("vertical") : to_string(*line.slope);
    entry["intercept"] = to_string(line.intercept);
    lines.push_back(std::move(entry));
  }
  json j;
  j["lines"] = std::move(lines);
  return j.dump(2) + "\n";
}

Arrangement arrangement_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("lines") || !j["lines"].is_array())
    throw Error("ArrangementFile needs a \"lines\" array");
  Arrangement arr;
  for (const auto& entry : j["lines"]) {
    if (!entry.is_object() || !entry.contains("slope") || !entry.contains("intercept"))
      throw Error("each line needs \"slope\" and \"intercept\"");
    std::string slope = entry["slope"].get<std::string>();
    Rational intercept = rational_from_string(entry["intercept"].get<std::string>());
    if (slope == "vertical")
      arr.lines.push_back(vertical_line(intercept));
    else
      arr.lines.push_back(make_line(rational_from_string(slope), intercept));
  }
  return arr;
}

InputShape detect_shape(const std::string& text) {
  json j = parse(text);
  if (j.is_object() && j.contains("events")) return InputShape::network;
  if (j.is_object() && j.contains("lines")) return InputShape::arrangement;
  throw Error("input is neither a NetworkFile nor an ArrangementFile");
}

}  // namespace msn
