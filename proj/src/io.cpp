#include "bandq/io.hpp"

#include <fstream>
#include <sstream>

#include "bandq/error.hpp"

namespace bandq {
namespace {

using nlohmann::json;

// DOM builder that keeps floating-point literals as their source text so
// decimals convert to rationals exactly.
class ExactNumberSax : public nlohmann::json_sax<json> {
 public:
  json root;

  bool null() override { return put(json(nullptr)); }
  bool boolean(bool v) override { return put(json(v)); }
  bool number_integer(number_integer_t v) override { return put(json(std::to_string(v))); }
  bool number_unsigned(number_unsigned_t v) override { return put(json(std::to_string(v))); }
  bool number_float(number_float_t, const string_t& s) override { return put(json(s)); }
  bool string(string_t& v) override { return put(json(v)); }
  bool binary(binary_t&) override { return put(json()); }

  bool start_object(std::size_t) override { return open(json::object()); }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(json::array()); }
  bool end_array() override { return close(); }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    throw Error(ErrorCode::ParseError,
                "invalid JSON at byte " + std::to_string(position) + ": " + ex.what());
  }

 private:
  std::vector<json*> stack_;
  std::string key_;

  json* insert(json value) {
    if (stack_.empty()) {
      root = std::move(value);
      return &root;
    }
    json& parent = *stack_.back();
    if (parent.is_array()) {
      parent.push_back(std::move(value));
      return &parent.back();
    }
    parent[key_] = std::move(value);
    return &parent[key_];
  }
  bool put(json value) {
    insert(std::move(value));
    return true;
  }
  bool open(json value) {
    stack_.push_back(insert(std::move(value)));
    return true;
  }
  bool close() {
    stack_.pop_back();
    return true;
  }
};

RationalMatrix parse_json_matrix(std::string_view text) {
  ExactNumberSax sax;
  json::sax_parse(text.begin(), text.end(), &sax);
  const json& doc = sax.root;
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
    throw Error(ErrorCode::ParseError, "JSON matrix needs an object with a \"rows\" array");
  std::vector<RationalVector> rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array()) throw Error(ErrorCode::ParseError, "each row must be an array");
    RationalVector r;
    for (const auto& entry : row) {
      if (!entry.is_string()) throw Error(ErrorCode::ParseError, "matrix entry must be a number or string");
      r.push_back(parse_rational(entry.get<std::string>()));
    }
    rows.push_back(std::move(r));
  }
  if (doc.contains("n")) {
    const auto& n = doc["n"];
    Rational declared = n.is_string() ? parse_rational(n.get<std::string>()) : Rational(-1);
    if (declared != static_cast<long>(rows.size()))
      throw Error(ErrorCode::NonSquare, "\"n\" does not match the number of rows");
  }
  return RationalMatrix::from_rows(rows);
}

RationalMatrix parse_plain_matrix(std::string_view text) {
  std::vector<RationalVector> rows;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    RationalVector r;
    std::string tok;
    while (tokens >> tok) r.push_back(parse_rational(tok));
    if (!r.empty()) rows.push_back(std::move(r));
  }
  return RationalMatrix::from_rows(rows);
}

}  // namespace

MatrixFormat parse_format_name(std::string_view name) {
  if (name == "json") return MatrixFormat::Json;
  if (name == "plain") return MatrixFormat::Plain;
  if (name == "auto") return MatrixFormat::Auto;
  throw Error(ErrorCode::InvalidArgument, "unknown matrix format '" + std::string(name) + "'");
}

RationalMatrix parse_matrix(std::string_view text, MatrixFormat format) {
  if (format == MatrixFormat::Auto) {
    auto first = text.find_first_not_of(" \t\r\n");
    format = (first != std::string_view::npos && text[first] == '{') ? MatrixFormat::Json
                                                                     : MatrixFormat::Plain;
  }
  return format == MatrixFormat::Json ? parse_json_matrix(text) : parse_plain_matrix(text);
}

RationalMatrix read_matrix_file(const std::string& path, MatrixFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str(), format);
}

std::string format_plain(const RationalMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (j) out += ' ';
      out += a(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

nlohmann::json matrix_to_json(const RationalMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.order(); ++i) rows.push_back(vector_to_json(a.row(i)));
  return {{"n", a.order()}, {"rows", rows}};
}

nlohmann::json vector_to_json(const RationalVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace bandq
