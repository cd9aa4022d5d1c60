#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cosine.hpp"
#include "grid.hpp"
#include "transforms.hpp"
#include "types.hpp"

namespace symtrig2d {

// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::runtime_error("malformed CSV: bad number '" + std::string(s) + "'");
  return v;
}

inline long parse_int(std::string_view s) {
  long v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw std::runtime_error("malformed CSV: bad integer '" + std::string(s) + "'");
  return v;
}

inline constexpr const char* kSampleCsvHeader = "m,n,x,y,re,im";
inline constexpr const char* kRasterCsvHeader = "x,y,re,im";
inline constexpr const char* kErrorTableCsvHeader = "N,exp_anti,exp_sym,cos2_anti,cos2_sym";

struct SampleRow {
  int m = 0;
  int n = 0;
  double x = 0.0;
  double y = 0.0;
  complexd value{};
};

inline std::string render_sample_csv(const std::vector<SampleRow>& rows) {
  std::string out(kSampleCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += std::to_string(r.m) + ',' + std::to_string(r.n) + ',' + format_double(r.x) +
           ',' + format_double(r.y) + ',' + format_double(r.value.real()) + ',' +
           format_double(r.value.imag()) + '\n';
  }
  return out;
}

namespace detail {

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace detail

inline std::vector<SampleRow> parse_sample_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kSampleCsvHeader)
    throw std::runtime_error("malformed CSV: expected header '" +
                             std::string(kSampleCsvHeader) + "'");
  std::vector<SampleRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = detail::split_csv_line(line);
    if (f.size() != 6) throw std::runtime_error("malformed CSV: expected 6 fields");
    rows.push_back({static_cast<int>(parse_int(f[0])), static_cast<int>(parse_int(f[1])),
                    parse_double(f[2]), parse_double(f[3]),
                    {parse_double(f[4]), parse_double(f[5])}});
  }
  return rows;
}

inline const char* family_name(Family f) {
  switch (f) {
    case Family::exp_anti: return "exp-anti";
    case Family::exp_sym: return "exp-sym";
    case Family::cos_anti: return "cos-anti";
    default: return "cos-sym";
  }
}

inline Family family_from_name(const std::string& s) {
  if (s == "exp-anti") return Family::exp_anti;
  if (s == "exp-sym") return Family::exp_sym;
  if (s == "cos-anti") return Family::cos_anti;
  if (s == "cos-sym") return Family::cos_sym;
  throw std::runtime_error("unknown family '" + s + "'");
}

using AnySpectrum = std::variant<Spectrum, CosineSpectrum>;

namespace detail {

// integer labels as JSON ints, half-integers as "p/2" strings
inline nlohmann::ordered_json freq_to_json(Freq f) {
  if (f.integral()) return f.twice() / 2;
  return std::to_string(f.twice()) + "/2";
}

inline Freq freq_from_json(const nlohmann::ordered_json& j) {
  if (j.is_number_integer()) return Freq::integer(j.get<int>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash != std::string::npos && s.substr(slash + 1) == "2")
      return Freq::from_twice(static_cast<int>(parse_int(s.substr(0, slash))));
  }
  throw std::runtime_error("spectrum: bad frequency label");
}

}  // namespace detail

inline std::string render_spectrum_json(const AnySpectrum& any) {
  nlohmann::ordered_json j;
  if (std::holds_alternative<Spectrum>(any)) {
    const auto& sp = std::get<Spectrum>(any);
    j["family"] = family_name(sp.family);
    j["variant"] = nullptr;
    j["N"] = sp.spec.n;
    j["a"] = sp.spec.a;
    j["b"] = sp.spec.b;
    j["t"] = sp.spec.t;
    auto pairs = sp.dominant_pairs();
    auto& arr = j["coeffs"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      arr.push_back({{"k", pairs[i].k},
                     {"l", pairs[i].l},
                     {"re", sp.coeffs[i].real()},
                     {"im", sp.coeffs[i].imag()}});
    }
  } else {
    const auto& sp = std::get<CosineSpectrum>(any);
    j["family"] = family_name(sp.family);
    j["variant"] = static_cast<int>(sp.variant);
    j["N"] = sp.m_points;
    j["a"] = 0.0;
    j["b"] = 0.0;
    j["t"] = 1.0;
    auto pairs = sp.dominant_pairs();
    auto& arr = j["coeffs"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      FrequencyPair label = sp.label(pairs[i].k, pairs[i].l);
      arr.push_back({{"k", detail::freq_to_json(label.lambda)},
                     {"l", detail::freq_to_json(label.mu)},
                     {"re", sp.coeffs[i]},
                     {"im", 0.0}});
    }
  }
  return j.dump(2) + "\n";
}

inline AnySpectrum parse_spectrum_json(const std::string& text) {
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
  Family family = family_from_name(j.at("family").get<std::string>());
  int n = j.at("N").get<int>();

  if (is_exponential(family)) {
    if (!j.at("variant").is_null())
      throw std::runtime_error("spectrum: exponential families take no variant");
    GridSpec spec{j.at("a").get<double>(), j.at("b").get<double>(), n,
                  j.value("t", 1.0)};
    Spectrum sp{family, spec, {}};
    GridKind kind = is_antisymmetric(family) ? GridKind::anti : GridKind::sym;
    sp.coeffs.assign(grid_size(kind, n), complexd{});
    for (const auto& e : j.at("coeffs")) {
      Freq fk = detail::freq_from_json(e.at("k"));
      Freq fl = detail::freq_from_json(e.at("l"));
      if (!fk.integral() || !fl.integral())
        throw std::runtime_error("spectrum: exponential labels must be integers");
      sp.dominant(fk.twice() / 2, fl.twice() / 2) = {e.at("re").get<double>(),
                                                     e.at("im").get<double>()};
    }
    return sp;
  }

  CosineVariant variant = cosine_variant_from_int(j.at("variant").get<int>());
  CosineSpectrum sp{family, variant, n, {}};
  sp.coeffs.assign(sp.dominant_pairs().size(), 0.0);
  bool half = detail::cosine_shape(variant).half_labels;
  for (const auto& e : j.at("coeffs")) {
    Freq fk = detail::freq_from_json(e.at("k"));
    Freq fl = detail::freq_from_json(e.at("l"));
    if (fk.integral() == half || fl.integral() == half)
      throw std::runtime_error("spectrum: label kind does not match variant");
    int k = half ? (fk.twice() - 1) / 2 : fk.twice() / 2;
    int l = half ? (fl.twice() - 1) / 2 : fl.twice() / 2;
    sp.coeffs[sp.index_of(k, l)] = e.at("re").get<double>();
  }
  return sp;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace symtrig2d
