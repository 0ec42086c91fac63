#include "lowdeg/spectrum_io.hpp"

#include <fstream>

namespace lowdeg {

namespace {

nlohmann::json header(const char* kind, int n) {
  nlohmann::json doc;
  doc["version"] = 1;
  doc["kind"] = kind;
  doc["n"] = n;
  doc["entries"] = nlohmann::json::array();
  return doc;
}

}  // namespace

nlohmann::json to_json(const OperatorSpectrum& spec) {
  nlohmann::json doc = header("operator", spec.n());
  for (const auto& [x, c] : spec.coeffs()) {
    doc["entries"].push_back({{"key", x.digits()}, {"re", c.real()}, {"im", c.imag()}});
  }
  return doc;
}

nlohmann::json to_json(const SuperopSpectrum& spec) {
  nlohmann::json doc = header("superop", spec.n());
  switch (spec.channel_flag()) {
    case ChannelFlag::Yes: doc["is_channel"] = "yes"; break;
    case ChannelFlag::No: doc["is_channel"] = "no"; break;
    case ChannelFlag::Unknown: doc["is_channel"] = "unknown"; break;
  }
  for (const auto& [k, c] : spec.coeffs()) {
    doc["entries"].push_back({{"x", k.first.digits()},
                              {"y", k.second.digits()},
                              {"re", c.real()},
                              {"im", c.imag()}});
  }
  return doc;
}

nlohmann::json to_json(const BooleanSpectrum& spec) {
  nlohmann::json doc = header("boolean", spec.n());
  for (const auto& [s, c] : spec.coeffs()) {
    doc["entries"].push_back({{"key", s.digits()}, {"re", c}, {"im", 0.0}});
  }
  return doc;
}

AnySpectrum spectrum_from_json(const nlohmann::json& doc) {
  const std::string kind = doc.at("kind").get<std::string>();
  const int n = doc.at("n").get<int>();
  if (kind == "operator") {
    OperatorSpectrum spec(n);
    for (const auto& e : doc.at("entries")) {
      spec.set(PauliString::from_digits(e.at("key").get<std::string>()),
               cplx(e.at("re").get<double>(), e.at("im").get<double>()));
    }
    return spec;
  }
  if (kind == "superop") {
    ChannelFlag flag = ChannelFlag::Unknown;
    if (doc.contains("is_channel")) {
      const std::string f = doc["is_channel"].get<std::string>();
      flag = f == "yes" ? ChannelFlag::Yes
                        : (f == "no" ? ChannelFlag::No : ChannelFlag::Unknown);
    }
    SuperopSpectrum spec(n, flag);
    for (const auto& e : doc.at("entries")) {
      spec.set(PauliString::from_digits(e.at("x").get<std::string>()),
               PauliString::from_digits(e.at("y").get<std::string>()),
               cplx(e.at("re").get<double>(), e.at("im").get<double>()));
    }
    return spec;
  }
  if (kind == "boolean") {
    BooleanSpectrum spec(n);
    for (const auto& e : doc.at("entries")) {
      spec.set(BitString::from_digits(e.at("key").get<std::string>()),
               e.at("re").get<double>());
    }
    return spec;
  }
  throw std::invalid_argument("unknown spectrum kind: " + kind);
}

void save_spectrum(const std::filesystem::path& path, const AnySpectrum& spec) {
  nlohmann::json doc =
      std::visit([](const auto& s) { return to_json(s); }, spec);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << "\n";
}

AnySpectrum load_spectrum(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  nlohmann::json doc;
  in >> doc;
  return spectrum_from_json(doc);
}

std::string kind_of(const AnySpectrum& spec) {
  if (std::holds_alternative<OperatorSpectrum>(spec)) return "operator";
  if (std::holds_alternative<SuperopSpectrum>(spec)) return "superop";
  return "boolean";
}

}  // namespace lowdeg
