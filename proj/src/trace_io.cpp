#include "repbasis/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace repbasis {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParse, what); }

std::int64_t as_int(const json& j, const char* what) {
  if (j.is_number_unsigned()) {
    if (j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      bad(std::string(what) + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(j.get<std::uint64_t>());
  }
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

json rep_value_json(RepValue v) {
  if (v.is_infinite()) return "inf";
  return static_cast<std::int64_t>(v.value());
}

RepValue rep_value_from(const json& j, const char* what) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return RepValue::infinity();
    bad(std::string(what) + ": only the string \"inf\" is allowed");
  }
  const std::int64_t v = as_int(j, what);
  if (v < 0) bad(std::string(what) + " must be nonnegative");
  return RepValue(static_cast<std::uint64_t>(v));
}

std::int64_t parse_key(const std::string& key) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(key, &used);
  } catch (const std::exception&) {
    bad("target key '" + key + "' is not an integer");
  }
  if (used != key.size()) bad("target key '" + key + "' is not an integer");
  return v;
}

json int_array(std::span<const std::int64_t> v) {
  json out = json::array();
  for (std::int64_t x : v) out.push_back(x);
  return out;
}

std::vector<std::int64_t> int_vector(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(as_int(e, what));
  return out;
}

std::string fixed6(long double v) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lf", v);
  return buf;
}

}  // namespace

// ------------------------------------------------------------------ RepTarget

json to_json(const RepTarget& f) {
  json values = json::object();
  const std::int64_t w = f.window();
  for (std::int64_t n = -w; n <= w; ++n) values[std::to_string(n)] = rep_value_json(f.at(n));
  return json{{"window", w}, {"values", values}, {"default", rep_value_json(f.default_value())}};
}

RepTarget rep_target_from_json(const json& j) {
  const std::int64_t w = as_int(field(j, "window"), "window");
  if (w < 0 || w > 10'000'000) bad("window must lie in [0, 10^7]");
  const RepValue def = rep_value_from(field(j, "default"), "default");
  if (def < RepValue(1)) bad("default must be >= 1 or \"inf\"");
  std::map<std::int64_t, RepValue> overrides;
  if (auto it = j.find("values"); it != j.end()) {
    if (!it->is_object()) bad("values must be an object");
    for (const auto& [key, v] : it->items()) {
      const std::int64_t n = parse_key(key);
      if (n < -w || n > w) bad("value key " + key + " lies outside the window");
      overrides[n] = rep_value_from(v, "value");
    }
  }
  return RepTarget::with_overrides(w, overrides, def);
}

// ---------------------------------------------------------------------- trace

json to_json(const ConstructionTrace& trace) {
  json stages = json::array();
  for (const StageRecord& s : trace.stages) {
    json st{{"index", s.index},
            {"kind", std::string(to_string(s.kind))},
            {"set", int_array(s.set.elements())},
            {"added", int_array(s.added)},
            {"m_covered", s.m_covered}};
    if (s.checkpoint) st["x"] = *s.checkpoint;
    stages.push_back(std::move(st));
  }
  return json{{"f", to_json(trace.f)},
              {"phi", trace.phi.to_string()},
              {"u_prefix", int_array(trace.u_prefix)},
              {"stages", std::move(stages)}};
}

ConstructionTrace trace_from_json(const json& j) {
  const json& phi = field(j, "phi");
  if (!phi.is_string()) bad("phi must be a string");
  ConstructionTrace trace{rep_target_from_json(field(j, "f")),
                          PhiSpec::parse(phi.get<std::string>()),
                          int_vector(field(j, "u_prefix"), "u_prefix"),
                          {}};
  const json& stages = field(j, "stages");
  if (!stages.is_array()) bad("stages must be an array");
  for (const json& st : stages) {
    StageRecord s;
    const std::int64_t index = as_int(field(st, "index"), "index");
    if (index < 1) bad("stage index must be positive");
    s.index = static_cast<std::size_t>(index);
    const json& kind = field(st, "kind");
    if (!kind.is_string()) bad("kind must be a string");
    s.kind = parse_stage_kind(kind.get<std::string>());
    std::vector<std::int64_t> elements = int_vector(field(st, "set"), "set");
    s.set = FiniteBasis(elements);
    if (s.set.size() != elements.size() || !std::is_sorted(elements.begin(), elements.end())) {
      bad("stage " + std::to_string(index) + " set must be strictly increasing");
    }
    s.added = int_vector(field(st, "added"), "added");
    if (auto it = st.find("x"); it != st.end()) s.checkpoint = as_int(*it, "x");
    if (auto it = st.find("m_covered"); it != st.end()) {
      const std::int64_t m = as_int(*it, "m_covered");
      if (m < 0) bad("m_covered must be nonnegative");
      s.m_covered = static_cast<std::size_t>(m);
    }
    trace.stages.push_back(std::move(s));
  }
  return trace;
}

std::string write_trace(const ConstructionTrace& trace) { return to_json(trace).dump() + "\n"; }

ConstructionTrace parse_trace(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    bad(std::string("trace is not valid JSON: ") + e.what());
  }
  return trace_from_json(j);
}

// --------------------------------------------------------------------- report

json to_json(const InvariantReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json e{{"name", c.name}, {"pass", c.pass}};
    if (c.stage) e["stage"] = *c.stage;
    if (c.witness) e["witness"] = *c.witness;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return json{{"pass", report.passed()},
              {"failures", report.failures()},
              {"total", report.checks.size()},
              {"checks", std::move(checks)}};
}

// ---------------------------------------------------------------------- stats

std::string stats_csv(const ConstructionTrace& trace) {
  std::ostringstream out;
  out << "l,x,count,bound,ratio,ceiling\n";
  const std::uint64_t r = trace.f.max_finite();
  for (const StageRecord& s : trace.stages) {
    if (!s.checkpoint) continue;
    const std::int64_t x = *s.checkpoint;
    const std::size_t count = counting(s.set, -x, x);
    const long double bound = density_bound(trace.phi, x);
    const long double ceiling =
        r == 0 ? std::numeric_limits<long double>::infinity()
               : std::sqrt(2.0L * static_cast<long double>(r) * (4.0L * static_cast<long double>(x) + 1.0L));
    out << (s.index + 1) / 2 << ',' << x << ',' << count << ',' << fixed6(bound) << ','
        << fixed6(static_cast<long double>(count) / bound) << ',' << fixed6(ceiling) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------- files

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) bad("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) bad("failed writing " + path.string());
}

}  // namespace repbasis
