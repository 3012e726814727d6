#include "fpinc/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "fpinc/errors.hpp"

namespace fpinc {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line.substr(0, line.find('#')));
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::int64_t parse_int(const std::string& tok, const std::string& source, std::size_t line) {
  std::int64_t v = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError(source, line, "expected an integer, got '" + tok + "'");
  return v;
}

void expect_arity(const std::vector<std::string>& t, std::size_t n, const std::string& source, std::size_t line) {
  if (t.size() != n + 1) {
    throw ParseError(source, line, "'" + t[0] + "' takes " + std::to_string(n) + " integers, got " +
                                       std::to_string(t.size() - 1));
  }
}

// --- JSON readers -----------------------------------------------------------

struct Reader {
  std::string source;

  [[noreturn]] void fail(const std::string& where, const std::string& what) const {
    throw ParseError(source, 0, where + ": " + what);
  }

  const json& at(const json& j, const std::string& key, const std::string& where) const {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, "missing field '" + key + "'");
    return *it;
  }

  u64 uint(const json& j, const std::string& where) const {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
      fail(where, "expected a non-negative integer");
    }
    return j.get<u64>();
  }
  std::size_t size(const json& j, const std::string& key, const std::string& where) const {
    return static_cast<std::size_t>(uint(at(j, key, where), where + "." + key));
  }
  bool boolean(const json& j, const std::string& where) const {
    if (!j.is_boolean()) fail(where, "expected true or false");
    return j.get<bool>();
  }
  double number(const json& j, const std::string& where) const {
    if (!j.is_number()) fail(where, "expected a number");
    return j.get<double>();
  }
  std::string string(const json& j, const std::string& where) const {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
  }
  const json& array(const json& j, const std::string& where) const {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
  }
};

json elems(const ElementSet& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(x.value());
  return out;
}

template <class H>
json triple(const H& h) {
  return json::array({h[0], h[1], h[2]});
}

template <class H>
json triples(const std::vector<H>& v) {
  json out = json::array();
  for (const auto& h : v) out.push_back(triple(h));
  return out;
}

template <class H>
json optional_triple(const std::optional<H>& h) {
  return h ? triple(*h) : json(nullptr);
}

json no_witness_json(const std::optional<NoWitness>& f) {
  if (!f) return nullptr;
  return {{"stage", f->stage}, {"reason", f->reason}, {"measured", f->measured}, {"required", f->required}};
}

json matrix_json(const Matrix3& m) {
  json out = json::array();
  for (const auto& row : m) out.push_back(json::array({row[0], row[1], row[2]}));
  return out;
}

struct ReportReader : Reader {
  u64 p = 0;

  FieldElement elem(const json& j, const std::string& where) const {
    const u64 v = uint(j, where);
    if (v >= p) fail(where, "residue " + std::to_string(v) + " is not below p");
    return FieldElement::from_residue(v, p);
  }
  ElementSet elems(const json& j, const std::string& where) const {
    ElementSet out;
    for (const auto& x : array(j, where)) out.insert(elem(x, where));
    return out;
  }
  Triple raw_triple(const json& j, const std::string& where) const {
    if (!j.is_array() || j.size() != 3) fail(where, "expected a triple");
    Triple t{};
    for (std::size_t i = 0; i < 3; ++i) t[i] = elem(j[i], where).value();
    if (t[0] == 0 && t[1] == 0 && t[2] == 0) fail(where, "all-zero triple");
    return t;
  }
  template <class H>
  H one(const json& j, const std::string& where) const {
    return H::from_residues(raw_triple(j, where), p);
  }
  template <class H>
  std::vector<H> many(const json& j, const std::string& where) const {
    std::vector<H> out;
    for (const auto& x : array(j, where)) out.push_back(one<H>(x, where));
    return out;
  }
  template <class H>
  std::optional<H> maybe(const json& j, const std::string& where) const {
    if (j.is_null()) return std::nullopt;
    return one<H>(j, where);
  }
  std::optional<NoWitness> no_witness(const json& j, const std::string& where) const {
    if (j.is_null()) return std::nullopt;
    return NoWitness{string(at(j, "stage", where), where), string(at(j, "reason", where), where),
                     number(at(j, "measured", where), where), number(at(j, "required", where), where)};
  }
  Matrix3 matrix(const json& j, const std::string& where) const {
    if (!j.is_array() || j.size() != 3) fail(where, "expected a 3x3 matrix");
    Matrix3 m{};
    for (std::size_t r = 0; r < 3; ++r) {
      if (!j[r].is_array() || j[r].size() != 3) fail(where, "expected a 3x3 matrix");
      for (std::size_t c = 0; c < 3; ++c) m[r][c] = elem(j[r][c], where).value();
    }
    return m;
  }
};

struct RatioField {
  const char* name;
  Ratio PipelineConfig::*member;
};

constexpr RatioField kRatioFields[] = {
    {"epsilon", &PipelineConfig::epsilon},
    {"truncation_constant", &PipelineConfig::truncation_constant},
    {"incidence_constant", &PipelineConfig::incidence_constant},
    {"p1_degree_constant", &PipelineConfig::p1_degree_constant},
    {"l1_constant", &PipelineConfig::l1_constant},
    {"p2_constant", &PipelineConfig::p2_constant},
    {"pair_constant", &PipelineConfig::pair_constant},
    {"j_constant", &PipelineConfig::j_constant},
    {"q1_constant", &PipelineConfig::q1_constant},
    {"rich_line_constant", &PipelineConfig::rich_line_constant},
    {"r_constant", &PipelineConfig::r_constant},
    {"witness_constant", &PipelineConfig::witness_constant},
};

struct BsgField {
  const char* name;
  Ratio BsgConfig::*member;
};

constexpr BsgField kBsgFields[] = {
    {"good_pair_constant", &BsgConfig::good_pair_constant},
    {"good_fraction", &BsgConfig::good_fraction},
    {"popularity_fraction", &BsgConfig::popularity_fraction},
    {"path_constant", &BsgConfig::path_constant},
    {"size_constant", &BsgConfig::size_constant},
    {"certificate_constant", &BsgConfig::certificate_constant},
};

}  // namespace

Instance parse_instance(std::istream& in, const std::string& source) {
  std::optional<PrimeContext> ctx;
  std::vector<ProjPoint> points;
  std::vector<ProjLine> lines;
  std::map<ProjPoint, std::size_t> point_line;
  std::map<ProjLine, std::size_t> line_line;
  std::string text;
  std::size_t no = 0;
  while (std::getline(in, text)) {
    ++no;
    const auto t = tokenize(text);
    if (t.empty()) continue;
    if (!ctx) {
      if (t[0] != "p" || t.size() != 2) throw ParseError(source, no, "expected header 'p <prime>'");
      const std::int64_t p = parse_int(t[1], source, no);
      try {
        if (p < 2) throw InvalidArgument("p must be a prime >= 2");
        ctx.emplace(static_cast<u64>(p));
      } catch (const InvalidArgument& e) {
        throw ParseError(source, no, e.what());
      }
      continue;
    }
    std::vector<std::int64_t> v;
    for (std::size_t i = 1; i < t.size(); ++i) v.push_back(parse_int(t[i], source, no));
    try {
      if (t[0] == "point" || t[0] == "point-h") {
        const bool h = t[0] == "point-h";
        expect_arity(t, h ? 3 : 2, source, no);
        const ProjPoint pt = h ? ProjPoint(*ctx, v[0], v[1], v[2]) : ProjPoint::affine(*ctx, v[0], v[1]);
        auto [it, fresh] = point_line.emplace(pt, no);
        if (!fresh) {
          std::ostringstream os;
          os << source << ":" << no << ": duplicate point " << pt << " (first given on line " << it->second << ")";
          throw DuplicateElement(os.str());
        }
        points.push_back(pt);
      } else if (t[0] == "line" || t[0] == "line-mc") {
        const bool mc = t[0] == "line-mc";
        expect_arity(t, mc ? 2 : 3, source, no);
        const ProjLine l = mc ? ProjLine::slope_intercept(*ctx, v[0], v[1]) : ProjLine(*ctx, v[0], v[1], v[2]);
        auto [it, fresh] = line_line.emplace(l, no);
        if (!fresh) {
          std::ostringstream os;
          os << source << ":" << no << ": duplicate line " << l << " (first given on line " << it->second << ")";
          throw DuplicateElement(os.str());
        }
        lines.push_back(l);
      } else if (t[0] == "p") {
        throw ParseError(source, no, "header 'p' given twice");
      } else {
        throw ParseError(source, no, "unknown record '" + t[0] + "'");
      }
    } catch (const InvalidArgument& e) {
      throw ParseError(source, no, e.what());
    }
  }
  if (!ctx) throw ParseError(source, no, "missing header 'p <prime>'");
  return Instance(*ctx, std::move(points), std::move(lines));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Instance read_instance_file(const std::string& path) {
  std::istringstream is(read_file(path));
  return parse_instance(is, path);
}

std::string write_instance(const Instance& inst) {
  std::ostringstream os;
  os << "p " << inst.p() << "\n";
  for (const auto& pt : inst.points()) {
    if (pt.is_affine()) {
      os << "point " << pt[0] << " " << pt[1] << "\n";
    } else {
      os << "point-h " << pt[0] << " " << pt[1] << " " << pt[2] << "\n";
    }
  }
  for (const auto& l : inst.lines()) os << "line " << l[0] << " " << l[1] << " " << l[2] << "\n";
  return os.str();
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json ratio_to_json(const Ratio& r) {
  std::int64_t d = r.den();
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  if (r.den() == 1) return r.num();
  if (d == 1) return r.to_double();
  return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

Ratio ratio_from_json(const json& j, const std::string& where) {
  if (j.is_number()) {
    const double x = j.get<double>();
    try {
      return Ratio::from_double(x);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument(where + ": " + e.what());
    }
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    std::int64_t num = 0, den = 1;
    bool ok = slash != std::string::npos;
    if (ok) {
      auto [p1, e1] = std::from_chars(s.data(), s.data() + slash, num);
      auto [p2, e2] = std::from_chars(s.data() + slash + 1, s.data() + s.size(), den);
      ok = e1 == std::errc() && e2 == std::errc() && p1 == s.data() + slash && p2 == s.data() + s.size();
    }
    if (!ok || den <= 0 || num < 0) throw InvalidArgument(where + ": expected a fraction 'a/b', got '" + s + "'");
    return Ratio(num, den);
  }
  throw InvalidArgument(where + ": expected a number or a fraction string");
}

json config_to_json(const PipelineConfig& cfg) {
  json j = json::object();
  for (const auto& f : kRatioFields) j[f.name] = ratio_to_json(cfg.*f.member);
  j["single_pass_truncation"] = cfg.single_pass_truncation;
  j["pad_to_k"] = cfg.pad_to_k;
  j["seed"] = cfg.seed;
  json b = json::object();
  for (const auto& f : kBsgFields) b[f.name] = ratio_to_json(cfg.bsg.*f.member);
  j["bsg"] = b;
  return j;
}

PipelineConfig config_from_json(const json& j, const std::string& source) {
  const Reader rd{source};
  if (!j.is_object()) rd.fail("config", "expected a JSON object");
  PipelineConfig cfg;
  for (const auto& [key, value] : j.items()) {
    try {
      bool known = false;
      for (const auto& f : kRatioFields)
        if (key == f.name) {
          cfg.*f.member = ratio_from_json(value, key);
          known = true;
        }
      if (known) continue;
      if (key == "single_pass_truncation") {
        cfg.single_pass_truncation = rd.boolean(value, key);
      } else if (key == "pad_to_k") {
        cfg.pad_to_k = rd.boolean(value, key);
      } else if (key == "seed") {
        cfg.seed = rd.uint(value, key);
      } else if (key == "bsg") {
        if (!value.is_object()) rd.fail("bsg", "expected an object");
        for (const auto& [bkey, bvalue] : value.items()) {
          bool bknown = false;
          for (const auto& f : kBsgFields)
            if (bkey == f.name) {
              cfg.bsg.*f.member = ratio_from_json(bvalue, "bsg." + bkey);
              bknown = true;
            }
          if (!bknown) rd.fail("bsg", "unknown field '" + bkey + "'");
        }
      } else {
        rd.fail("config", "unknown field '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(source, 0, e.what());
    }
  }
  try {
    cfg.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(source, 0, e.what());
  }
  return cfg;
}

PipelineConfig load_config(const std::string& path) {
  const std::string text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path, 0, std::string("invalid JSON: ") + e.what());
  }
  return config_from_json(j, path);
}

json report_to_json(const WitnessReport& r) {
  const RefinementTrace& t = r.trace;
  json stages = json::array();
  for (const auto& s : t.stages) stages.push_back({{"name", s.name}, {"size", s.size}, {"mass", s.mass}});
  json checks = json::array();
  for (const auto& c : t.checks) {
    checks.push_back({{"stage", c.stage}, {"name", c.name}, {"measured", c.measured}, {"required", c.required},
                      {"passed", c.passed}});
  }
  json trace = {{"n_bound", t.n_bound},
                {"incidences", t.incidences},
                {"k", t.k},
                {"stages", stages},
                {"checks", checks},
                {"p1", triples(t.p1)},
                {"p1_prime", triples(t.p1_prime)},
                {"l1", triples(t.l1)},
                {"p2", triples(t.p2)},
                {"pt1", optional_triple(t.pt1)},
                {"pt2", optional_triple(t.pt2)},
                {"q", triples(t.q)},
                {"j", triples(t.j)},
                {"q1", triples(t.q1)},
                {"rich_line", optional_triple(t.rich_line)},
                {"q2", triples(t.q2)},
                {"pt3", optional_triple(t.pt3)},
                {"pt4", optional_triple(t.pt4)},
                {"r", triples(t.r)},
                {"r_cover", t.r_cover},
                {"failure", no_witness_json(t.failure)}};

  json edges = json::array();
  for (const auto& [x, y] : r.e) edges.push_back(json::array({x.value(), y.value()}));

  const BsgExtraction& ex = r.extraction;
  const BsgCertificate& c = r.certificate;
  json bsg = {
      {"ran", r.bsg_ran},
      {"extraction",
       {{"found", ex.found},
        {"refined", elems(ex.refined)},
        {"candidate", elems(ex.candidate)},
        {"candidate_good_pairs", ex.candidate_good_pairs},
        {"min_paths", ex.min_paths},
        {"required_size", ex.required_size},
        {"reason", ex.reason}}},
      {"certificate",
       {{"a_prime", elems(c.a_prime)},
        {"degenerate", c.degenerate},
        {"min_path4_count", c.min_path4_count},
        {"ratio_min_path4_count", c.ratio_min_path4_count},
        {"ratio_excluded_edges", c.ratio_excluded_edges},
        {"sizes",
         {{"a", c.sizes.a},
          {"b", c.sizes.b},
          {"e", c.sizes.e},
          {"partial_diff", c.sizes.partial_diff},
          {"partial_ratio", c.sizes.partial_ratio},
          {"partial_ratio_zero_free", c.sizes.partial_ratio_zero_free},
          {"aprime_diff", c.sizes.aprime_diff},
          {"aprime_ratio", c.sizes.aprime_ratio}}},
        {"diff_bound_ok", c.diff_bound_ok},
        {"ratio_bound_ok", c.ratio_bound_ok},
        {"path_recount_ok", c.path_recount_ok}}}};

  json rudnev = nullptr;
  if (r.rudnev) {
    rudnev = {{"size", r.rudnev->size},
              {"dminus", r.rudnev->dminus},
              {"dratio", r.rudnev->dratio},
              {"ratio", r.rudnev->ratio},
              {"warn_large", r.rudnev->warn_large}};
  }

  return {{"outcome", r.witness ? "witness" : "no_witness"},
          {"no_witness", no_witness_json(r.no_witness)},
          {"p", r.p},
          {"num_points", r.num_points},
          {"num_lines", r.num_lines},
          {"n_bound", r.n_bound},
          {"incidences", r.incidences},
          {"warn_n_ge_p", r.warn_n_ge_p},
          {"k_max", r.k_max},
          {"truncated", {{"points", r.truncated_points}, {"lines", r.truncated_lines},
                         {"incidences", r.truncated_incidences}}},
          {"config", config_to_json(r.config)},
          {"thresholds", {{"log_factors", "dropped"}, {"form", "max(1, constant * power of N and K)"}}},
          {"trace", trace},
          {"normalization",
           {{"normalized", r.normalized},
            {"map", matrix_json(r.map)},
            {"gradient", r.gradient},
            {"dropped_on_common_line", r.dropped_on_common_line}}},
          {"k", r.k},
          {"a", elems(r.a)},
          {"b", elems(r.b)},
          {"padded_a", elems(r.padded_a)},
          {"padded_b", elems(r.padded_b)},
          {"e", edges},
          {"partial_diff", r.partial_diff},
          {"partial_ratio", r.partial_ratio},
          {"partial_ratio_excluded", r.partial_ratio_excluded},
          {"gradient_one_cover", triples(r.gradient_one_cover)},
          {"origin_cover", triples(r.origin_cover)},
          {"bsg", bsg},
          {"rudnev", rudnev},
          {"comparison",
           {{"e_over_b", r.e_over_b},
            {"k5_over_n", r.k5_over_n},
            {"diff_lemma_value", r.diff_lemma_value},
            {"ratio_lemma_value", r.ratio_lemma_value}}}};
}

WitnessReport report_from_json(const json& j, const std::string& source) {
  ReportReader rd;
  rd.source = source;
  WitnessReport r;
  r.p = rd.uint(rd.at(j, "p", "report"), "p");
  try {
    (void)PrimeContext(r.p);
  } catch (const Error& e) {
    rd.fail("p", e.what());
  }
  rd.p = r.p;
  const std::string outcome = rd.string(rd.at(j, "outcome", "report"), "outcome");
  if (outcome != "witness" && outcome != "no_witness") rd.fail("outcome", "expected witness or no_witness");
  r.witness = outcome == "witness";
  r.no_witness = rd.no_witness(rd.at(j, "no_witness", "report"), "no_witness");
  r.num_points = rd.size(j, "num_points", "report");
  r.num_lines = rd.size(j, "num_lines", "report");
  r.n_bound = rd.size(j, "n_bound", "report");
  r.incidences = rd.size(j, "incidences", "report");
  r.warn_n_ge_p = rd.boolean(rd.at(j, "warn_n_ge_p", "report"), "warn_n_ge_p");
  r.k_max = rd.size(j, "k_max", "report");
  const json& tr = rd.at(j, "truncated", "report");
  r.truncated_points = rd.size(tr, "points", "truncated");
  r.truncated_lines = rd.size(tr, "lines", "truncated");
  r.truncated_incidences = rd.size(tr, "incidences", "truncated");
  r.config = config_from_json(rd.at(j, "config", "report"), source);

  const json& t = rd.at(j, "trace", "report");
  RefinementTrace& tc = r.trace;
  tc.n_bound = rd.size(t, "n_bound", "trace");
  tc.incidences = rd.size(t, "incidences", "trace");
  tc.k = rd.size(t, "k", "trace");
  for (const auto& s : rd.array(rd.at(t, "stages", "trace"), "trace.stages")) {
    tc.stages.push_back({rd.string(rd.at(s, "name", "stage"), "stage.name"), rd.size(s, "size", "stage"),
                         rd.size(s, "mass", "stage")});
  }
  for (const auto& c : rd.array(rd.at(t, "checks", "trace"), "trace.checks")) {
    tc.checks.push_back({rd.string(rd.at(c, "stage", "check"), "check.stage"),
                         rd.string(rd.at(c, "name", "check"), "check.name"),
                         rd.number(rd.at(c, "measured", "check"), "check.measured"),
                         rd.number(rd.at(c, "required", "check"), "check.required"),
                         rd.boolean(rd.at(c, "passed", "check"), "check.passed")});
  }
  tc.p1 = rd.many<ProjPoint>(rd.at(t, "p1", "trace"), "trace.p1");
  tc.p1_prime = rd.many<ProjPoint>(rd.at(t, "p1_prime", "trace"), "trace.p1_prime");
  tc.l1 = rd.many<ProjLine>(rd.at(t, "l1", "trace"), "trace.l1");
  tc.p2 = rd.many<ProjPoint>(rd.at(t, "p2", "trace"), "trace.p2");
  tc.pt1 = rd.maybe<ProjPoint>(rd.at(t, "pt1", "trace"), "trace.pt1");
  tc.pt2 = rd.maybe<ProjPoint>(rd.at(t, "pt2", "trace"), "trace.pt2");
  tc.q = rd.many<ProjPoint>(rd.at(t, "q", "trace"), "trace.q");
  tc.j = rd.many<ProjLine>(rd.at(t, "j", "trace"), "trace.j");
  tc.q1 = rd.many<ProjPoint>(rd.at(t, "q1", "trace"), "trace.q1");
  tc.rich_line = rd.maybe<ProjLine>(rd.at(t, "rich_line", "trace"), "trace.rich_line");
  tc.q2 = rd.many<ProjPoint>(rd.at(t, "q2", "trace"), "trace.q2");
  tc.pt3 = rd.maybe<ProjPoint>(rd.at(t, "pt3", "trace"), "trace.pt3");
  tc.pt4 = rd.maybe<ProjPoint>(rd.at(t, "pt4", "trace"), "trace.pt4");
  tc.r = rd.many<ProjPoint>(rd.at(t, "r", "trace"), "trace.r");
  const json& rc = rd.at(t, "r_cover", "trace");
  if (!rc.is_array() || rc.size() != 4) rd.fail("trace.r_cover", "expected four counts");
  for (std::size_t i = 0; i < 4; ++i) tc.r_cover[i] = static_cast<std::size_t>(rd.uint(rc[i], "trace.r_cover"));
  tc.failure = rd.no_witness(rd.at(t, "failure", "trace"), "trace.failure");

  const json& nm = rd.at(j, "normalization", "report");
  r.normalized = rd.boolean(rd.at(nm, "normalized", "normalization"), "normalization.normalized");
  r.map = rd.matrix(rd.at(nm, "map", "normalization"), "normalization.map");
  r.gradient = rd.uint(rd.at(nm, "gradient", "normalization"), "normalization.gradient");
  r.dropped_on_common_line = rd.size(nm, "dropped_on_common_line", "normalization");

  r.k = rd.size(j, "k", "report");
  r.a = rd.elems(rd.at(j, "a", "report"), "a");
  r.b = rd.elems(rd.at(j, "b", "report"), "b");
  r.padded_a = rd.elems(rd.at(j, "padded_a", "report"), "padded_a");
  r.padded_b = rd.elems(rd.at(j, "padded_b", "report"), "padded_b");
  for (const auto& e : rd.array(rd.at(j, "e", "report"), "e")) {
    if (!e.is_array() || e.size() != 2) rd.fail("e", "expected pairs [x, y]");
    r.e.insert({rd.elem(e[0], "e"), rd.elem(e[1], "e")});
  }
  r.partial_diff = rd.size(j, "partial_diff", "report");
  r.partial_ratio = rd.size(j, "partial_ratio", "report");
  r.partial_ratio_excluded = rd.size(j, "partial_ratio_excluded", "report");
  r.gradient_one_cover = rd.many<ProjLine>(rd.at(j, "gradient_one_cover", "report"), "gradient_one_cover");
  r.origin_cover = rd.many<ProjLine>(rd.at(j, "origin_cover", "report"), "origin_cover");

  const json& bsg = rd.at(j, "bsg", "report");
  r.bsg_ran = rd.boolean(rd.at(bsg, "ran", "bsg"), "bsg.ran");
  const json& ex = rd.at(bsg, "extraction", "bsg");
  r.extraction.found = rd.boolean(rd.at(ex, "found", "extraction"), "extraction.found");
  r.extraction.refined = rd.elems(rd.at(ex, "refined", "extraction"), "extraction.refined");
  r.extraction.candidate = rd.elems(rd.at(ex, "candidate", "extraction"), "extraction.candidate");
  r.extraction.candidate_good_pairs = rd.size(ex, "candidate_good_pairs", "extraction");
  r.extraction.min_paths = rd.uint(rd.at(ex, "min_paths", "extraction"), "extraction.min_paths");
  r.extraction.required_size = rd.size(ex, "required_size", "extraction");
  r.extraction.reason = rd.string(rd.at(ex, "reason", "extraction"), "extraction.reason");

  const json& ce = rd.at(bsg, "certificate", "bsg");
  BsgCertificate& c = r.certificate;
  c.a_prime = rd.elems(rd.at(ce, "a_prime", "certificate"), "certificate.a_prime");
  c.degenerate = rd.boolean(rd.at(ce, "degenerate", "certificate"), "certificate.degenerate");
  c.min_path4_count = rd.uint(rd.at(ce, "min_path4_count", "certificate"), "certificate.min_path4_count");
  c.ratio_min_path4_count =
      rd.uint(rd.at(ce, "ratio_min_path4_count", "certificate"), "certificate.ratio_min_path4_count");
  c.ratio_excluded_edges = rd.size(ce, "ratio_excluded_edges", "certificate");
  const json& sz = rd.at(ce, "sizes", "certificate");
  c.sizes.a = rd.size(sz, "a", "sizes");
  c.sizes.b = rd.size(sz, "b", "sizes");
  c.sizes.e = rd.size(sz, "e", "sizes");
  c.sizes.partial_diff = rd.size(sz, "partial_diff", "sizes");
  c.sizes.partial_ratio = rd.size(sz, "partial_ratio", "sizes");
  c.sizes.partial_ratio_zero_free = rd.size(sz, "partial_ratio_zero_free", "sizes");
  c.sizes.aprime_diff = rd.size(sz, "aprime_diff", "sizes");
  c.sizes.aprime_ratio = rd.size(sz, "aprime_ratio", "sizes");
  c.diff_bound_ok = rd.boolean(rd.at(ce, "diff_bound_ok", "certificate"), "certificate.diff_bound_ok");
  c.ratio_bound_ok = rd.boolean(rd.at(ce, "ratio_bound_ok", "certificate"), "certificate.ratio_bound_ok");
  c.path_recount_ok = rd.boolean(rd.at(ce, "path_recount_ok", "certificate"), "certificate.path_recount_ok");

  const json& ru = rd.at(j, "rudnev", "report");
  if (!ru.is_null()) {
    DifferenceRatio d;
    d.size = rd.size(ru, "size", "rudnev");
    d.dminus = rd.size(ru, "dminus", "rudnev");
    d.dratio = rd.size(ru, "dratio", "rudnev");
    d.ratio = rd.number(rd.at(ru, "ratio", "rudnev"), "rudnev.ratio");
    d.warn_large = rd.boolean(rd.at(ru, "warn_large", "rudnev"), "rudnev.warn_large");
    r.rudnev = d;
  }

  const json& cmp = rd.at(j, "comparison", "report");
  r.e_over_b = rd.number(rd.at(cmp, "e_over_b", "comparison"), "comparison.e_over_b");
  r.k5_over_n = rd.number(rd.at(cmp, "k5_over_n", "comparison"), "comparison.k5_over_n");
  r.diff_lemma_value = rd.number(rd.at(cmp, "diff_lemma_value", "comparison"), "comparison.diff_lemma_value");
  r.ratio_lemma_value = rd.number(rd.at(cmp, "ratio_lemma_value", "comparison"), "comparison.ratio_lemma_value");
  return r;
}

}  // namespace fpinc
