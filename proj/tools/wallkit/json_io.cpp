#include "json_io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>

#include "wallkit/error.hpp"

namespace wallkit::cli {

json to_json(Integer const& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(n));
  }
  return json(to_string(n));
}

json to_json(IntVector const& v) {
  json out = json::array();
  for (auto const& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(IntMatrix const& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json to_json(LatticeVector const& v) {
  return json{{"lattice", v.lattice()->name()}, {"coords", to_json(v.coords())}};
}

json to_json(WallReport const& report) {
  json walls = json::array();
  for (auto const& w : report.walls) {
    json entry{{"coords", to_json(w.ray.coords())}, {"q", to_json(w.q)}, {"div", to_json(w.div)}};
    if (w.case_id) entry["case"] = *w.case_id;
    walls.push_back(std::move(entry));
  }
  return json{{"complete", report.complete}, {"count", report.walls.size()}, {"walls", walls}};
}

Integer integer_from_json(json const& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (std::exception const&) {
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "expected an integer, got " + j.dump());
}

IntVector vector_from_json(json const& j) {
  if (!j.is_array()) throw Error(ErrorCode::kInvalidArgument, "expected an integer array");
  IntVector out;
  for (auto const& x : j) out.push_back(integer_from_json(x));
  return out;
}

IntVector parse_coords(std::string_view text) {
  IntVector out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string token(text.substr(pos, comma - pos));
    while (!token.empty() && token.front() == ' ') token.erase(token.begin());
    while (!token.empty() && token.back() == ' ') token.pop_back();
    bool valid = !token.empty();
    for (std::size_t i = 0; i < token.size() && valid; ++i) {
      char c = token[i];
      valid = std::isdigit(static_cast<unsigned char>(c)) ||
              (i == 0 && (c == '-' || c == '+') && token.size() > 1);
    }
    if (!valid) {
      throw Error(ErrorCode::kInvalidArgument, "bad coordinate list '" + std::string(text) + "'");
    }
    if (token.front() == '+') token.erase(token.begin());
    out.emplace_back(token);
    pos = comma + 1;
  }
  return out;
}

PicardEmbedding picard_from_json(json const& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("basis")) {
    throw Error(ErrorCode::kInvalidArgument, "Picard JSON needs \"ambient\" and \"basis\"");
  }
  LatticePtr ambient = make_standard(j.at("ambient").get<std::string>());
  std::vector<LatticeVector> basis;
  for (auto const& row : j.at("basis")) basis.emplace_back(ambient, vector_from_json(row));
  return PicardEmbedding(ambient, std::move(basis));
}

PicardEmbedding read_picard_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (json::exception const& e) {
    throw Error(ErrorCode::kInvalidArgument, path + ": " + e.what());
  }
  return picard_from_json(j);
}

}  // namespace wallkit::cli
