#include "obp/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace obp {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError("invalid JSON at byte offset " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::vector<Vertex> vertex_list(const json& node, const std::string& path) {
  if (!node.is_array()) throw FormatError(path + ": expected an array of vertex indices");
  std::vector<Vertex> out;
  for (std::size_t t = 0; t < node.size(); ++t) {
    const auto& v = node[t];
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > std::numeric_limits<Vertex>::max())
      throw FormatError(path + "/" + std::to_string(t) + ": expected a positive vertex index");
    out.push_back(static_cast<Vertex>(v.get<long long>()));
  }
  return out;
}

}  // namespace

std::string format_partition(const OrderedPartition& partition) {
  json bicliques = json::array();
  for (const auto& b : partition.bicliques()) bicliques.push_back({{"u", b.first()}, {"w", b.second()}});
  json doc = {{"n_vertices", partition.universe_size()}, {"bicliques", std::move(bicliques)}};
  return doc.dump() + "\n";
}

OrderedPartition parse_partition(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw FormatError("/: expected an object");
  if (!doc.contains("n_vertices")) throw FormatError("/n_vertices: missing");
  const auto& order = doc["n_vertices"];
  if (!order.is_number_integer() || order.get<long long>() < 1 ||
      order.get<long long>() > std::numeric_limits<Vertex>::max())
    throw FormatError("/n_vertices: expected a positive integer");
  if (!doc.contains("bicliques") || !doc["bicliques"].is_array()) throw FormatError("/bicliques: expected an array");

  const auto universe = static_cast<Vertex>(order.get<long long>());
  std::vector<Biclique> bicliques;
  const auto& list = doc["bicliques"];
  for (std::size_t b = 0; b < list.size(); ++b) {
    const std::string path = "/bicliques/" + std::to_string(b);
    const auto& entry = list[b];
    if (!entry.is_object() || !entry.contains("u") || !entry.contains("w"))
      throw FormatError(path + ": expected an object with \"u\" and \"w\"");
    auto first = vertex_list(entry["u"], path + "/u");
    auto second = vertex_list(entry["w"], path + "/w");
    for (const auto& [side, name] : {std::pair{&first, "/u"}, std::pair{&second, "/w"}})
      for (std::size_t t = 0; t < side->size(); ++t)
        if ((*side)[t] > universe)
          throw FormatError(path + name + "/" + std::to_string(t) + ": vertex exceeds n_vertices");
    try {
      bicliques.emplace_back(std::move(first), std::move(second));
    } catch (const std::invalid_argument& e) {
      throw FormatError(path + ": " + e.what());
    }
  }
  return OrderedPartition(universe, std::move(bicliques));
}

std::string format_matrix(const BooleanMatrix& m) {
  std::string out = std::to_string(m.rows()) + "\n";
  out.reserve(out.size() + static_cast<std::size_t>(m.rows() * (m.cols() + 1)));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out += m(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

BooleanMatrix parse_matrix(std::string_view text) {
  std::size_t pos = 0;
  const auto fail = [&](const std::string& what) -> FormatError {
    return FormatError("matrix file, byte offset " + std::to_string(pos) + ": " + what);
  };
  long long order = 0;
  if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') throw fail("expected the matrix order");
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
    order = order * 10 + (text[pos] - '0');
    if (order > 1'000'000) throw fail("matrix order too large");
    ++pos;
  }
  if (pos >= text.size() || text[pos] != '\n') throw fail("expected a newline after the order");
  ++pos;

  const auto n = static_cast<Eigen::Index>(order);
  BooleanMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      if (pos >= text.size()) throw fail("unexpected end of file");
      if (text[pos] != '0' && text[pos] != '1') throw fail("expected '0' or '1'");
      m(r, c) = text[pos] == '1' ? 1 : 0;
      ++pos;
    }
    if (pos >= text.size() || text[pos] != '\n') throw fail("expected a newline ending row " + std::to_string(r + 1));
    ++pos;
  }
  if (pos != text.size()) throw fail("trailing data after the last row");
  return m;
}

FoolingSetClaim parse_cells(std::string_view text, int z) {
  const json doc = parse_json(text);
  if (!doc.is_array()) throw FormatError("/: expected an array of [row, column] pairs");
  FoolingSetClaim claim;
  claim.z = z;
  for (std::size_t t = 0; t < doc.size(); ++t) {
    const auto& cell = doc[t];
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number_integer() || !cell[1].is_number_integer())
      throw FormatError("/" + std::to_string(t) + ": expected [row, column]");
    claim.cells.emplace_back(cell[0].get<Eigen::Index>(), cell[1].get<Eigen::Index>());
  }
  return claim;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + temp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write failed for " + temp.string());
  }
  std::filesystem::rename(temp, path);
}

}  // namespace obp
