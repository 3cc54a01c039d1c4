#include "skewcliff/spec_file.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "skewcliff/error.hpp"

namespace skewcliff {

using nlohmann::json;

namespace {

class FieldReader {
 public:
  explicit FieldReader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& field, const std::string& what) const {
    throw ParseError(source_ + ": field " + field + ": " + what);
  }

  Scalar scalar(const json& j, const std::string& field) const {
    if (!j.is_string()) fail(field, "scalars must be strings such as \"1/2\"");
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(field, e.what());
    }
  }

  ScalarMatrix matrix(const json& j, std::size_t n, const std::string& field) const {
    if (!j.is_array() || j.size() != n) fail(field, "expected " + std::to_string(n) + " rows");
    ScalarMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      const std::string row_field = field + "[" + std::to_string(r + 1) + "]";
      if (!j[r].is_array() || j[r].size() != n) fail(row_field, "expected " + std::to_string(n) + " entries");
      for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar(j[r][c], row_field + "[" + std::to_string(c + 1) + "]");
    }
    return m;
  }

 private:
  std::string source_;
};

}  // namespace

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

AlgebraSpecFile parse_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str(), path.filename().string());
}

AlgebraSpecFile parse_spec_text(std::string_view text, const std::string& source) {
  const FieldReader rd(source);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(source + ": top level must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "n" && key != "kind" && key != "mu" && key != "forms" && key != "tau") rd.fail(key, "unknown field");
  }

  AlgebraSpecFile out;
  out.source = source;
  out.digest = fnv1a64_hex(text);

  if (!doc.contains("n") || !doc["n"].is_number_integer()) rd.fail("n", "required positive integer");
  const auto n = doc["n"].get<long long>();
  if (n < 1 || n > static_cast<long long>(kMaxGenerators)) rd.fail("n", "must be between 1 and 16");
  out.n = static_cast<std::size_t>(n);

  if (doc.contains("kind")) {
    const json& k = doc["kind"];
    if (!k.is_string()) rd.fail("kind", "must be \"gca\" or \"gsca\"");
    const auto s = k.get<std::string>();
    if (s == "gca") {
      out.kind = AlgebraKind::gca;
    } else if (s == "gsca") {
      out.kind = AlgebraKind::gsca;
    } else {
      rd.fail("kind", "must be \"gca\" or \"gsca\"");
    }
  } else {
    out.kind = doc.contains("mu") ? AlgebraKind::gsca : AlgebraKind::gca;
  }

  if (doc.contains("mu")) {
    ScalarMatrix m = rd.matrix(doc["mu"], out.n, "mu");
    try {
      out.mu = validate_mu(std::move(m));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      rd.fail("mu", e.what());
    }
  } else {
    out.mu = MuMatrix::ones(out.n);
  }
  if (out.kind == AlgebraKind::gca && !out.mu.is_all_ones()) rd.fail("mu", "kind \"gca\" requires mu = 1");

  if (!doc.contains("forms") || !doc["forms"].is_array()) rd.fail("forms", "required list of n matrices");
  const json& forms = doc["forms"];
  if (forms.size() != out.n) rd.fail("forms", "expected " + std::to_string(out.n) + " matrices, got " + std::to_string(forms.size()));
  for (std::size_t k = 0; k < out.n; ++k) {
    const std::string field = "forms[" + std::to_string(k + 1) + "]";
    ScalarMatrix m = rd.matrix(forms[k], out.n, field);
    try {
      out.forms.emplace_back(std::move(m), out.mu);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      rd.fail(field, out.kind == AlgebraKind::gca ? std::string(e.what()) + " (gca forms must be symmetric)" : e.what());
    }
  }

  if (doc.contains("tau")) {
    const json& t = doc["tau"];
    if (!t.is_array() || t.size() != out.n) rd.fail("tau", "expected " + std::to_string(out.n) + " scalars");
    std::vector<Scalar> lambdas;
    for (std::size_t i = 0; i < out.n; ++i) lambdas.push_back(rd.scalar(t[i], "tau[" + std::to_string(i + 1) + "]"));
    try {
      out.tau = DiagonalAutomorphism(std::move(lambdas));
    } catch (const Error& e) {
      rd.fail("tau", e.what());
    }
  }
  return out;
}

}  // namespace skewcliff
