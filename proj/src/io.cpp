#include "qsym/io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace qsym {

EmitFormat emit_format_from_string(const std::string& s) {
  if (s == "canonical-text" || s == "text") return EmitFormat::CanonicalText;
  if (s == "magma-script" || s == "magma") return EmitFormat::MagmaScript;
  if (s == "json") return EmitFormat::Json;
  throw ParseError("unknown emit format '" + s + "'");
}

StopReason stop_reason_from_string(const std::string& s) {
  if (s == "exhausted") return StopReason::Exhausted;
  if (s == "bound") return StopReason::BoundReached;
  if (s == "one") return StopReason::ZeroFound;
  if (s == "budget") return StopReason::BudgetExceeded;
  throw ParseError("unknown stop reason '" + s + "'");
}

Json stats_to_json(const GbStats& s, bool with_timing) {
  Json j{{"reduction_steps", s.reduction_steps},
         {"obstructions_processed", s.obstructions_processed},
         {"zero_reductions", s.zero_reductions},
         {"elements_added", s.elements_added},
         {"elements_removed", s.elements_removed}};
  if (with_timing) j["seconds"] = s.seconds;
  return j;
}

Json verdict_to_json(const Verdict& v) {
  return Json{{"status", to_string(v.status)},
              {"witness_degree", v.witness_degree},
              {"bound", v.bound},
              {"field", v.field},
              {"order", v.order}};
}

Verdict verdict_from_json(const Json& j) {
  try {
    Verdict v;
    v.status = verdict_status_from_string(j.at("status").get<std::string>());
    v.witness_degree = j.value("witness_degree", -1);
    v.bound = j.at("bound").get<int>();
    v.field = j.value("field", std::string("Q"));
    v.order = j.value("order", std::vector<int>{});
    return v;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("verdict: ") + e.what());
  }
}

std::string content_hash(const std::string& text) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("content_hash: digest failed");
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

}  // namespace qsym
