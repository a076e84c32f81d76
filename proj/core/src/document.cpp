#include "ternac/document.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace ternac {

namespace {

using Json = nlohmann::ordered_json;

// nlohmann keeps the last of duplicate keys; reject them instead.
Json parse_strict(std::string_view text) {
  std::vector<std::set<std::string>> open;
  auto callback = [&](int, Json::parse_event_t event, Json& parsed) {
    switch (event) {
      case Json::parse_event_t::object_start: open.emplace_back(); break;
      case Json::parse_event_t::object_end: open.pop_back(); break;
      case Json::parse_event_t::key: {
        const auto key = parsed.get<std::string>();
        if (!open.back().insert(key).second) throw DocumentError("", "duplicate key \"" + key + "\"");
        break;
      }
      default: break;
    }
    return true;
  };
  try {
    return Json::parse(text.begin(), text.end(), callback);
  } catch (const Json::parse_error& e) {
    // Messages read "[json.exception.parse_error.101] parse error at line 1, column 2: ..."
    std::string what = e.what();
    const auto at = what.find(" at line ");
    std::string location = "byte " + std::to_string(e.byte);
    if (at != std::string::npos) {
      const auto colon = what.find(':', at);
      location = what.substr(at + 4, colon - at - 4);
    }
    const auto colon = what.find(": ", at == std::string::npos ? 0 : at);
    throw DocumentError(location, colon == std::string::npos ? what : what.substr(colon + 2));
  }
}

const Json& field(const Json& obj, const std::string& where, const char* key) {
  if (!obj.is_object()) throw DocumentError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string join(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

std::size_t positive_integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() <= 0) throw DocumentError(where, "expected a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

std::size_t index_in(const Json& v, const std::string& where, std::size_t n) {
  if (!v.is_number_integer()) throw DocumentError(where, "expected an integer index");
  const long long i = v.get<long long>();
  if (i < 1 || static_cast<std::size_t>(i) > n)
    throw DocumentError(where, "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  return static_cast<std::size_t>(i - 1);
}

Scalar scalar(const Json& v, const std::string& where, Field f) {
  if (!v.is_string()) throw DocumentError(where, "scalars must be strings such as \"3/4\"");
  Scalar c;
  try {
    c = Scalar::parse(v.get<std::string>());
  } catch (const ScalarParseError& e) {
    throw DocumentError(where, e.what());
  }
  if (!c.belongs_to(f)) throw DocumentError(where, "value " + c.str() + " is not in " + field_name(f));
  return c;
}

Field field_of(const Json& doc) {
  auto it = doc.find("field");
  if (it == doc.end()) return Field::Rational;
  if (!it->is_string()) throw DocumentError("field", "expected \"Q\" or \"Q(i)\"");
  try {
    return parse_field(it->get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw DocumentError("field", e.what());
  }
}

void reject_unknown(const Json& obj, const std::string& where, std::initializer_list<const char*> known) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw DocumentError(join(where, key), "unknown field");
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

Algebra parse_algebra(std::string_view text) {
  const Json doc = parse_strict(text);
  if (!doc.is_object()) throw DocumentError("", "an algebra document must be an object");
  reject_unknown(doc, "", {"dim", "arity", "field", "constants", "name", "description"});
  const std::size_t n = positive_integer(field(doc, "", "dim"), "dim");
  const Json& a = field(doc, "", "arity");
  if (!a.is_number_integer() || (a.get<int>() != 2 && a.get<int>() != 3))
    throw DocumentError("arity", "arity must be 2 or 3");
  const int arity = a.get<int>();
  const Field f = field_of(doc);
  Algebra alg(n, arity, f);
  const Json& constants = field(doc, "", "constants");
  if (!constants.is_array()) throw DocumentError("constants", "expected a list");
  static constexpr const char* kIndex[] = {"i", "j", "k"};
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t r = 0; r < constants.size(); ++r) {
    const std::string where = "constants[" + std::to_string(r) + "]";
    const Json& rec = constants[r];
    if (!rec.is_object()) throw DocumentError(where, "expected an object");
    if (arity == 2) reject_unknown(rec, where, {"i", "j", "s", "c"});
    else reject_unknown(rec, where, {"i", "j", "k", "s", "c"});
    std::vector<std::size_t> key;
    for (int t = 0; t < arity; ++t) key.push_back(index_in(field(rec, where, kIndex[t]), join(where, kIndex[t]), n));
    const std::size_t s = index_in(field(rec, where, "s"), join(where, "s"), n);
    const Scalar c = scalar(field(rec, where, "c"), join(where, "c"), f);
    std::vector<std::size_t> full = key;
    full.push_back(s);
    if (!seen.insert(full).second) throw DocumentError(where, "duplicate constant for the same (indices, s)");
    alg.set_constant(key, s, c);
  }
  return alg;
}

Algebra read_algebra(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra(buf.str());
  } catch (const DocumentError& e) {
    throw DocumentError(path.string() + (e.location().empty() ? "" : ": " + e.location()), e.message());
  }
}

std::string algebra_to_json(const Algebra& alg) {
  Json doc;
  doc["dim"] = alg.dim();
  doc["arity"] = alg.arity();
  doc["field"] = field_name(alg.field());
  Json constants = Json::array();
  const std::size_t n = alg.dim();
  static constexpr const char* kIndex[] = {"i", "j", "k"};
  for (std::size_t flat = 0; flat < alg.input_count(); ++flat) {
    const auto out = alg.product(flat);
    for (std::size_t s = 0; s < n; ++s) {
      if (out[s].is_zero()) continue;
      Json rec;
      std::size_t rest = flat;
      std::vector<std::size_t> idx(static_cast<std::size_t>(alg.arity()));
      for (std::size_t t = idx.size(); t-- > 0;) {
        idx[t] = rest % n;
        rest /= n;
      }
      for (std::size_t t = 0; t < idx.size(); ++t) rec[kIndex[t]] = idx[t] + 1;
      rec["s"] = s + 1;
      rec["c"] = out[s].str();
      constants.push_back(std::move(rec));
    }
  }
  doc["constants"] = std::move(constants);
  return dump(doc);
}

Cochain parse_cochain(std::string_view text) {
  const Json doc = parse_strict(text);
  if (!doc.is_object()) throw DocumentError("", "a cochain document must be an object");
  reject_unknown(doc, "", {"dim", "arity", "degree", "field", "entries"});
  const std::size_t n = positive_integer(field(doc, "", "dim"), "dim");
  const Json& a = field(doc, "", "arity");
  if (!a.is_number_integer() || (a.get<int>() != 2 && a.get<int>() != 3))
    throw DocumentError("arity", "arity must be 2 or 3");
  const Json& d = field(doc, "", "degree");
  if (!d.is_number_integer() || d.get<long long>() < 0) throw DocumentError("degree", "expected a degree >= 0");
  const Field f = field_of(doc);
  Cochain phi(a.get<int>(), static_cast<std::size_t>(d.get<long long>()), n);
  const Json& entries = field(doc, "", "entries");
  if (!entries.is_array()) throw DocumentError("entries", "expected a list");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t r = 0; r < entries.size(); ++r) {
    const std::string where = "entries[" + std::to_string(r) + "]";
    const Json& rec = entries[r];
    if (!rec.is_object()) throw DocumentError(where, "expected an object");
    reject_unknown(rec, where, {"inputs", "output", "c"});
    const Json& inputs = field(rec, where, "inputs");
    if (!inputs.is_array() || inputs.size() != phi.inputs())
      throw DocumentError(join(where, "inputs"), "expected " + std::to_string(phi.inputs()) + " indices");
    std::vector<std::size_t> idx;
    for (std::size_t t = 0; t < inputs.size(); ++t)
      idx.push_back(index_in(inputs[t], join(where, "inputs[" + std::to_string(t) + "]"), n));
    const std::size_t s = index_in(field(rec, where, "output"), join(where, "output"), n);
    const std::size_t flat = phi.flat_input(idx);
    if (!seen.emplace(flat, s).second) throw DocumentError(where, "duplicate entry for the same (inputs, output)");
    phi.at(flat, s) = scalar(field(rec, where, "c"), join(where, "c"), f);
  }
  return phi;
}

std::string cochain_to_json(const Cochain& phi, Field f) {
  Json doc;
  doc["dim"] = phi.dim();
  doc["arity"] = phi.family_arity();
  doc["degree"] = phi.degree();
  doc["field"] = field_name(f);
  Json entries = Json::array();
  for (std::size_t flat = 0; flat < phi.input_count(); ++flat) {
    const auto value = phi.value(flat);
    for (std::size_t s = 0; s < phi.dim(); ++s) {
      if (value[s].is_zero()) continue;
      Json inputs = Json::array();
      for (std::size_t i : phi.unflatten(flat)) inputs.push_back(i + 1);
      Json rec;
      rec["inputs"] = std::move(inputs);
      rec["output"] = s + 1;
      rec["c"] = value[s].str();
      entries.push_back(std::move(rec));
    }
  }
  doc["entries"] = std::move(entries);
  return dump(doc);
}

}  // namespace ternac
