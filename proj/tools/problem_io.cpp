#include "problem_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "quadft/error.hpp"

namespace quadft::cli {

using nlohmann::json;

namespace {

double number_field(const json& j, const std::string& where) {
  if (!j.is_number()) throw InputError("field '" + where + "': expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw InputError("field '" + where + "': not finite");
  return v;
}

const json& member(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError("missing field '" + where + key + "'");
  return *it;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top level: expected a JSON object");

  std::string label;
  if (const auto it = doc.find("label"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) throw InputError("field 'label': expected a string");
    label = it->get<std::string>();
  }

  if (const auto it = doc.find("square"); it != doc.end()) {
    if (doc.contains("points") || doc.contains("weights")) {
      throw InputError("field 'square': cannot be combined with 'points'/'weights'");
    }
    if (!it->is_object()) throw InputError("field 'square': expected an object");
    SquareProblem sp;
    sp.a = number_field(member(*it, "a", "square."), "square.a");
    sp.B1 = number_field(member(*it, "B1", "square."), "square.B1");
    sp.B4 = number_field(member(*it, "B4", "square."), "square.B4");
    validate(sp);
    return ProblemFile{QuadProblem(canonical_vertices(sp.a), {sp.B1, sp.B1, sp.B4, sp.B4}),
                       std::move(label), sp};
  }

  const json& pts = member(doc, "points", "");
  if (!pts.is_array() || pts.size() != 4) {
    throw InputError("field 'points': expected an array of 4 [x, y] pairs");
  }
  Quad vertices;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    if (!pts[i].is_array() || pts[i].size() != 2) {
      throw InputError("field '" + where + "': expected [x, y]");
    }
    vertices[i] = Point{number_field(pts[i][0], where + "[0]"), number_field(pts[i][1], where + "[1]")};
  }
  const json& ws = member(doc, "weights", "");
  if (!ws.is_array() || ws.size() != 4) {
    throw InputError("field 'weights': expected an array of 4 numbers");
  }
  std::array<double, 4> weights{};
  for (std::size_t i = 0; i < 4; ++i) {
    weights[i] = number_field(ws[i], "weights[" + std::to_string(i) + "]");
  }
  return ProblemFile{QuadProblem(vertices, weights), std::move(label), std::nullopt};
}

ProblemFile load_problem(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open '" + path + "'");
    buf << f.rdbuf();
  }
  return parse_problem(buf.str());
}

Report make_report(const ProblemFile& file, const Solution& solution) {
  Report r{file.label, file.problem, solution, std::nullopt};
  if (!solution.case_tag.absorbed()) r.angles = angles_at_point(file.problem, solution.location);
  return r;
}

json to_json(const Report& report) {
  json points = json::array();
  for (const Point& p : report.problem.vertices()) points.push_back({p.x, p.y});
  const Solution& s = report.solution;
  json out = {
      {"label", report.label},
      {"problem", {{"points", points}, {"weights", report.problem.weights()}}},
      {"solution",
       {{"location", {s.location.x, s.location.y}},
        {"case", to_string(s.case_tag)},
        {"absorbed_vertex", s.case_tag.absorbed() ? json(s.case_tag.vertex) : json(nullptr)},
        {"method", to_string(s.method)},
        {"residual", s.residual},
        {"objective", s.objective},
        {"fallback", s.fallback}}},
  };
  if (report.angles) {
    const AngleSet& a = *report.angles;
    out["angles"] = {{"alpha102", a.alpha102},
                     {"alpha203", a.alpha203},
                     {"alpha304", a.alpha304},
                     {"alpha401", a.alpha401}};
  } else {
    out["angles"] = nullptr;
  }
  return out;
}

Report report_from_json(const json& j) {
  try {
    const json& prob = j.at("problem");
    Quad v;
    for (std::size_t i = 0; i < 4; ++i) {
      v[i] = Point{prob.at("points").at(i).at(0).get<double>(), prob.at("points").at(i).at(1).get<double>()};
    }
    const auto w = prob.at("weights").get<std::array<double, 4>>();
    const json& sj = j.at("solution");
    Solution s;
    s.location = Point{sj.at("location").at(0).get<double>(), sj.at("location").at(1).get<double>()};
    s.case_tag = sj.at("absorbed_vertex").is_null()
                     ? CaseTag::floating()
                     : CaseTag::absorbed_at(sj.at("absorbed_vertex").get<int>());
    const std::string method = sj.at("method").get<std::string>();
    for (Method m : {Method::ClosedFormSquare, Method::AngleTransfer, Method::Diagonal,
                     Method::Weiszfeld, Method::Absorbed}) {
      if (to_string(m) == method) s.method = m;
    }
    s.residual = sj.at("residual").get<double>();
    s.objective = sj.at("objective").get<double>();
    s.fallback = sj.at("fallback").get<bool>();
    std::optional<AngleSet> angles;
    if (const json& aj = j.at("angles"); !aj.is_null()) {
      angles = AngleSet{aj.at("alpha102").get<double>(), aj.at("alpha203").get<double>(),
                        aj.at("alpha304").get<double>(), aj.at("alpha401").get<double>()};
    }
    return Report{j.value("label", std::string{}), QuadProblem(v, w), s, angles};
  } catch (const json::exception& e) {
    throw InputError(std::string("report: ") + e.what());
  }
}

std::string format_text(const Report& report) {
  const Solution& s = report.solution;
  std::ostringstream os;
  if (!report.label.empty()) os << "label:      " << report.label << '\n';
  os << "case:       " << to_string(s.case_tag) << '\n'
     << "method:     " << to_string(s.method) << (s.fallback ? " (fallback)" : "") << '\n'
     << "location:   (" << g17(s.location.x) << ", " << g17(s.location.y) << ")\n"
     << (s.case_tag.absorbed() ? "slack:      " : "residual:   ") << g17(s.residual) << '\n'
     << "objective:  " << g17(s.objective) << '\n';
  if (report.angles) {
    const AngleSet& a = *report.angles;
    char buf[160];
    std::snprintf(buf, sizeof buf, "angles:     a102=%.6f a203=%.6f a304=%.6f a401=%.6f deg\n",
                  degrees(a.alpha102), degrees(a.alpha203), degrees(a.alpha304), degrees(a.alpha401));
    os << buf;
  }
  return os.str();
}

std::string format_csv(const Report& report) {
  const Solution& s = report.solution;
  std::ostringstream os;
  os << "label,x,y,case,method,residual,objective,fallback,alpha102_deg,alpha203_deg,alpha304_deg,"
        "alpha401_deg\n";
  std::string label = report.label;
  if (label.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : label) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
    label = quoted + "\"";
  }
  os << label << ',' << g17(s.location.x) << ',' << g17(s.location.y) << ',' << to_string(s.case_tag)
     << ',' << to_string(s.method) << ',' << g17(s.residual) << ',' << g17(s.objective) << ','
     << (s.fallback ? "true" : "false");
  if (report.angles) {
    const AngleSet& a = *report.angles;
    for (double v : {a.alpha102, a.alpha203, a.alpha304, a.alpha401}) os << ',' << g17(degrees(v));
  } else {
    os << ",,,,";
  }
  os << '\n';
  return os.str();
}

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      f.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace quadft::cli
