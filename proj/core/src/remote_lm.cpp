#include "maskstego/remote_lm.hpp"

#include <charconv>
#include <cmath>

#include <httplib.h>
#include <json.hpp>

#include "maskstego/error.hpp"

namespace maskstego {

using nlohmann::json;

std::string format_probability(double value) {
  char buffer[64];
  const auto res = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, res.ptr);
}

double parse_probability(std::string_view text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw Error(ErrorKind::protocol, "malformed decimal probability '" + std::string(text) + "'");
  }
  return value;
}

namespace {

json parse_body(const std::string& body) {
  try {
    return json::parse(body);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::protocol, std::string("inference service sent invalid JSON: ") + e.what());
  }
}

const json& field(const json& object, const char* name, json::value_t type) {
  if (!object.is_object() || !object.contains(name) || object.at(name).type() != type) {
    throw Error(ErrorKind::protocol, std::string("response field '") + name +
                                         "' is missing or has the wrong type");
  }
  return object.at(name);
}

}  // namespace

RemoteLM::RemoteLM(std::string endpoint, RemoteOptions options)
    : endpoint_(std::move(endpoint)), options_(options) {
  while (!endpoint_.empty() && endpoint_.back() == '/') endpoint_.pop_back();
  if (endpoint_.empty()) throw Error(ErrorKind::config, "remote LM endpoint is empty");
}

std::string RemoteLM::post(const std::string& path, const std::string& body) const {
  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt < std::max(1, options_.attempts); ++attempt) {
    httplib::Client client(endpoint_);
    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
    client.set_connection_timeout(seconds);
    client.set_read_timeout(seconds);
    client.set_write_timeout(seconds);
    auto res = client.Post(path, body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status == 503) {
      last_error = "service unavailable (503)";
      continue;
    }
    if (res->status != 200) {
      throw Error(ErrorKind::protocol, "POST " + path + " returned HTTP " +
                                           std::to_string(res->status) + ": " + res->body);
    }
    return res->body;
  }
  throw Error(ErrorKind::transport, "POST " + endpoint_ + path + " failed: " + last_error);
}

std::string RemoteLM::get(const std::string& path) const {
  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt < std::max(1, options_.attempts); ++attempt) {
    httplib::Client client(endpoint_);
    const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
    client.set_connection_timeout(seconds);
    client.set_read_timeout(seconds);
    auto res = client.Get(path);
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status != 200) {
      throw Error(ErrorKind::protocol,
                  "GET " + path + " returned HTTP " + std::to_string(res->status));
    }
    return res->body;
  }
  throw Error(ErrorKind::transport, "GET " + endpoint_ + path + " failed: " + last_error);
}

void RemoteLM::observe_digest(const std::string& digest) const {
  std::lock_guard lock(mutex_);
  if (!digest_) {
    digest_ = digest;
  } else if (*digest_ != digest) {
    throw Error(ErrorKind::determinism,
                "model digest changed from '" + *digest_ + "' to '" + digest + "'");
  }
}

PredictionDistribution RemoteLM::predict(const TokenSequence& temporary, std::size_t position,
                                         double min_prob) const {
  if (position >= temporary.size() || !temporary[position].is_mask()) {
    throw Error(ErrorKind::contract,
                "position " + std::to_string(position) + " does not hold the mask sentinel");
  }
  json tokens = json::array();
  for (const auto& t : temporary) tokens.push_back(t.surface());
  const json request = {
      {"tokens", std::move(tokens)},
      {"mask_index", position},
      {"min_prob", format_probability(min_prob)},
  };
  const json reply = parse_body(post("/v1/predict", request.dump()));

  const std::string& digest = field(reply, "model_digest", json::value_t::string).get_ref<const std::string&>();
  observe_digest(digest);

  const double total_mass =
      parse_probability(field(reply, "total_mass", json::value_t::string).get<std::string>());
  if (std::fabs(total_mass - 1.0) > options_.mass_tolerance) {
    throw Error(ErrorKind::protocol,
                "total_mass " + format_probability(total_mass) + " is not within tolerance of 1");
  }

  std::vector<Prediction> entries;
  for (const auto& entry : field(reply, "entries", json::value_t::array)) {
    const auto& surface = field(entry, "token", json::value_t::string).get_ref<const std::string&>();
    if (surface.empty()) throw Error(ErrorKind::protocol, "empty token in predict response");
    const double prob = parse_probability(field(entry, "prob", json::value_t::string).get<std::string>());
    // Decimal rounding on the wire may land a hair under the requested floor.
    if (prob < min_prob) continue;
    entries.push_back({Token(surface), prob});
  }
  return PredictionDistribution(std::move(entries), total_mass);
}

TokenSequence RemoteLM::tokenize(std::string_view text) const {
  const json request = {{"text", std::string(text)}};
  const json reply = parse_body(post("/v1/tokenize", request.dump()));
  TokenSequence out;
  for (const auto& t : field(reply, "tokens", json::value_t::array)) {
    if (!t.is_string() || t.get_ref<const std::string&>().empty()) {
      throw Error(ErrorKind::protocol, "tokenize response holds a non-string or empty token");
    }
    out.emplace_back(t.get<std::string>());
  }
  return out;
}

std::string RemoteLM::model_digest() const {
  const json reply = parse_body(get("/v1/health"));
  std::string digest = field(reply, "model_digest", json::value_t::string).get<std::string>();
  observe_digest(digest);
  return digest;
}

void RemoteLM::probe() const {
  const json request = {
      {"tokens", {"the", std::string(kMaskSurface), "."}},
      {"mask_index", 1},
      {"min_prob", "0.01"},
  };
  const std::string body = request.dump();
  const std::string first = post("/v1/predict", body);
  const std::string second = post("/v1/predict", body);
  if (first != second) {
    throw Error(ErrorKind::determinism,
                "inference service answered an identical probe request differently");
  }
  observe_digest(field(parse_body(first), "model_digest", json::value_t::string).get<std::string>());
}

}  // namespace maskstego
