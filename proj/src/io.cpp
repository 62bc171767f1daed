#include "kproj/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace kproj {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

json point_json(Point2 p) { return json::array({p.x, p.y}); }

Point2 point_from(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json sequence_json(const AlphaSequence& seq) {
  json j;
  j["case"] = to_string(seq.family());
  if (seq.family() == Case::A) {
    j["q"] = seq.exponent();
  } else {
    j["lambda"] = seq.lambda();
  }
  if (seq.family() == Case::C)
    j["precision"] =
        seq.precision() == Precision::extended ? "extended" : "standard";
  j["scale"] = seq.scale();  // informational; always derived on load
  return j;
}

AlphaSequence sequence_from(const json& j) {
  try {
    const auto family = case_from_string(j.at("case").get<std::string>());
    if (!family) throw std::invalid_argument("unknown case label");
    switch (*family) {
      case Case::A:
        return AlphaSequence::case_a(j.at("q").get<double>());
      case Case::B:
        return AlphaSequence::case_b(j.at("lambda").get<double>());
      case Case::C: {
        Precision mode = Precision::standard;
        if (j.value("precision", "standard") == std::string("extended"))
          mode = Precision::extended;
        return AlphaSequence::case_c(j.at("lambda").get<double>(), mode);
      }
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad sequence: ") + e.what());
  }
  throw std::invalid_argument("unknown case label");
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

AlphaSequence RunConfig::make_sequence() const {
  switch (family) {
    case Case::A: return AlphaSequence::case_a(q);
    case Case::B: return AlphaSequence::case_b(lambda);
    case Case::C: return AlphaSequence::case_c(lambda, mode);
  }
  throw std::invalid_argument("unknown case");
}

void RunConfig::apply_defaults() {
  int def_n1 = 30, def_depth = 32;
  switch (family) {
    case Case::A:
      def_n1 = 1000;
      def_depth = 1002;
      break;
    case Case::B:
      break;
    case Case::C:
      def_n1 = mode == Precision::extended ? 22 : 10;
      def_depth = mode == Precision::extended ? 24 : 12;
      break;
  }
  if (n0 <= 0) n0 = 2;
  if (n1 <= 0) n1 = def_n1;
  if (depth <= 0) depth = std::max(def_depth, n1 + 2);
}

RunConfig config_from_json(const std::string& text) {
  const json j = parse(text);
  RunConfig cfg;
  try {
    if (j.contains("case")) {
      const auto family = case_from_string(j.at("case").get<std::string>());
      if (!family) throw std::invalid_argument("unknown case label");
      cfg.family = *family;
    }
    if (j.contains("lambda")) cfg.lambda = j.at("lambda").get<double>();
    if (j.contains("q")) cfg.q = j.at("q").get<double>();
    if (j.contains("depth")) cfg.depth = j.at("depth").get<int>();
    if (j.contains("range")) {
      const json& r = j.at("range");
      if (r.is_array()) {
        cfg.n0 = r.at(0).get<int>();
        cfg.n1 = r.at(1).get<int>();
      } else {
        const std::string s = r.get<std::string>();
        const auto colon = s.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("range must be n0:n1");
        cfg.n0 = std::stoi(s.substr(0, colon));
        cfg.n1 = std::stoi(s.substr(colon + 1));
      }
    }
    if (j.contains("out")) cfg.out_dir = j.at("out").get<std::string>();
    if (j.contains("formats"))
      cfg.formats = j.at("formats").get<std::vector<std::string>>();
    if (j.contains("precision"))
      cfg.mode = j.at("precision").get<std::string>() == "extended"
                     ? Precision::extended
                     : Precision::standard;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad config: ") + e.what());
  }
  return cfg;
}

std::string config_to_json(const RunConfig& cfg) {
  json j;
  j["case"] = to_string(cfg.family);
  if (cfg.family == Case::A) {
    j["q"] = cfg.q;
  } else {
    j["lambda"] = cfg.lambda;
  }
  j["depth"] = cfg.depth;
  j["range"] = json::array({cfg.n0, cfg.n1});
  j["out"] = cfg.out_dir;
  j["formats"] = cfg.formats;
  j["precision"] =
      cfg.mode == Precision::extended ? "extended" : "standard";
  return j.dump(2);
}

std::string sequence_to_json(const AlphaSequence& seq) {
  return sequence_json(seq).dump(2);
}

AlphaSequence sequence_from_json(const std::string& text) {
  return sequence_from(parse(text));
}

std::string boundary_to_json(const BoundaryModel& model) {
  json j;
  j["sequence"] = sequence_json(model.seq);
  j["depth"] = model.depth;
  j["mirror_real_axis"] = model.mirror_real_axis;
  j["mirror_imag_axis"] = model.mirror_imag_axis;
  json pieces = json::array();
  for (const Piece& p : model.pieces) {
    json e;
    if (p.kind == PieceKind::arc) {
      e["type"] = "arc";
      e["center"] = point_json(p.arc.center);
      e["radius"] = p.arc.radius;
      e["start_angle"] = p.arc.start_angle;
      e["end_angle"] = p.arc.end_angle;
      e["index"] = p.arc.index;
    } else {
      e["type"] = p.kind == PieceKind::closure ? "closure" : "segment";
      e["from"] = point_json(p.seg.from);
      e["to"] = point_json(p.seg.to);
      e["index"] = p.seg.index;
    }
    pieces.push_back(std::move(e));
  }
  j["pieces"] = std::move(pieces);
  return j.dump(2);
}

BoundaryModel boundary_from_json(const std::string& text) {
  const json j = parse(text);
  try {
    BoundaryModel model{sequence_from(j.at("sequence")),
                        j.at("depth").get<int>(),
                        {},
                        j.at("mirror_real_axis").get<bool>(),
                        j.at("mirror_imag_axis").get<bool>()};
    for (const json& e : j.at("pieces")) {
      Piece p;
      const std::string type = e.at("type").get<std::string>();
      if (type == "arc") {
        p.kind = PieceKind::arc;
        p.arc = {point_from(e.at("center")), e.at("radius").get<double>(),
                 e.at("start_angle").get<double>(),
                 e.at("end_angle").get<double>(), e.at("index").get<int>()};
      } else {
        p.kind = type == "closure" ? PieceKind::closure : PieceKind::segment;
        p.seg = {point_from(e.at("from")), point_from(e.at("to")),
                 e.at("index").get<int>()};
      }
      model.pieces.push_back(p);
    }
    return model;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad boundary: ") + e.what());
  }
}

std::string projection_to_json(const ProjectionResult& result) {
  json j;
  j["point"] = point_json(result.point);
  j["distance"] = result.distance;
  j["piece_index"] = result.piece_index;
  j["truncation_safe"] = result.truncation_safe;
  return j.dump(2);
}

std::string lemma_report_to_json(const LemmaReport& report,
                                 const RunConfig& cfg) {
  json j;
  j["lemma"] = report.lemma;
  j["range"] = json::array({report.n0, report.n1});
  j["observed"] = report.observed;
  j["target"] = report.target;
  j["tolerance"] = report.tolerance;
  j["max_deviation"] = report.max_deviation;
  j["pass"] = report.pass;
  j["notes"] = report.notes;
  j["config"] = parse(config_to_json(cfg));
  return j.dump(2);
}

std::string quotients_csv(const std::vector<QuotientSample>& samples) {
  std::ostringstream out;
  out << "theta,Dx,Dy\n";
  for (const QuotientSample& s : samples) {
    out << format_double(s.theta) << ',' << format_double(s.quotient.x)
        << ',' << format_double(s.quotient.y) << '\n';
  }
  return out.str();
}

std::string lemma_csv(const LemmaReport& report) {
  std::ostringstream out;
  out << "n,value\n";
  for (size_t i = 0; i < report.observed.size(); ++i) {
    out << report.n0 + static_cast<int>(i) << ','
        << format_double(report.observed[i]) << '\n';
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace kproj
