#include "jinf/formats.hpp"

#include <json.hpp>

#include "jinf/set_expr.hpp"

namespace jinf {
namespace {

using nlohmann::json;

json permutationValue(const ComputablePermutation& s) {
  json classes = json::array();
  for (const auto& c : s.classMaps()) {
    classes.push_back({{"from", c.from}, {"to", c.to}, {"offset", c.offset}});
  }
  json patch = json::object();
  for (const auto& [n, m] : s.patch()) patch[std::to_string(n)] = m;
  return json{{"modulus", s.modulus()},
              {"threshold", s.threshold()},
              {"classes", classes},
              {"patch", patch}};
}

ComputablePermutation permutationFromValue(const json& j) {
  if (!j.is_object()) throw FormatError("permutation must be an object");
  std::vector<ComputablePermutation::ClassMap> classes;
  for (const auto& c : j.at("classes")) {
    classes.push_back({c.at("from").get<std::uint64_t>(), c.at("to").get<std::uint64_t>(),
                       c.at("offset").get<std::int64_t>()});
  }
  std::map<std::uint64_t, std::uint64_t> patch;
  if (j.contains("patch")) {
    for (const auto& [key, value] : j.at("patch").items()) {
      std::size_t used = 0;
      std::uint64_t n = 0;
      try {
        n = std::stoull(key, &used);
      } catch (const std::exception&) {
        throw FormatError("patch key '" + key + "' is not a point");
      }
      if (used != key.size() || n < 1) throw FormatError("patch key '" + key + "' is not a point");
      patch.emplace(n, value.get<std::uint64_t>());
    }
  }
  return ComputablePermutation::fromSpec(j.at("threshold").get<std::uint64_t>(),
                                         j.at("modulus").get<std::uint64_t>(), classes, patch);
}

AutomorphismValue automorphismFromValue(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw FormatError("automorphism needs a kind");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "regular") {
    const bool flip = j.value("flip", false);
    return RegularAutomorphism{permutationFromValue(j.at("perm")), flip};
  }
  if (kind == "piecewise") {
    std::vector<PiecewiseAutomorphism::Piece> pieces;
    for (const auto& piece : j.at("pieces")) {
      pieces.push_back(
          {Vertex::fromSet(parseSetExpression(piece.at("rep").get<std::string>())),
           permutationFromValue(piece.at("perm"))});
    }
    return PiecewiseAutomorphism(std::move(pieces));
  }
  throw FormatError("unknown automorphism kind '" + kind + "'");
}

}  // namespace

std::string permutationToJson(const ComputablePermutation& s) {
  return permutationValue(s).dump(2);
}

ComputablePermutation permutationFromJson(const std::string& text) {
  try {
    return permutationFromValue(json::parse(text));
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

std::string automorphismToJson(const AutomorphismValue& f) {
  json out;
  if (const auto* reg = std::get_if<RegularAutomorphism>(&f)) {
    out = {{"kind", "regular"}, {"flip", reg->flip}, {"perm", permutationValue(reg->perm)}};
  } else {
    const auto& pw = std::get<PiecewiseAutomorphism>(f);
    json pieces = json::array();
    for (const auto& piece : pw.pieces()) {
      pieces.push_back(
          {{"rep", renderSet(piece.rep.set())}, {"perm", permutationValue(piece.perm)}});
    }
    out = {{"kind", "piecewise"}, {"pieces", pieces}};
  }
  return out.dump(2);
}

AutomorphismValue automorphismFromJson(const std::string& text) {
  try {
    return automorphismFromValue(json::parse(text));
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

AutomorphismOracle oracleFromValue(const AutomorphismValue& f) {
  if (const auto* reg = std::get_if<RegularAutomorphism>(&f)) return makeOracle(*reg);
  return makeOracle(std::get<PiecewiseAutomorphism>(f));
}

std::string certificateToJson(const NonRegularityCertificate& cert) {
  return json{{"a", renderSet(cert.a.set())},
              {"y", renderSet(cert.y.set())},
              {"fa", renderSet(cert.fa.set())},
              {"fy", renderSet(cert.fy.set())}}
      .dump(2);
}

NonRegularityCertificate certificateFromJson(const std::string& text) {
  try {
    const json j = json::parse(text);
    auto vertexAt = [&](const char* key) {
      return Vertex::fromSet(parseSetExpression(j.at(key).get<std::string>()));
    };
    return {vertexAt("a"), vertexAt("y"), vertexAt("fa"), vertexAt("fy")};
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

}  // namespace jinf
