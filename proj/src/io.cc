/*
 * Copyright 2026 The skirental Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "skirental/io.h"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "nlohmann/json.hpp"

namespace skirental {
namespace {

using Json = nlohmann::json;

absl::StatusOr<Json> ParseJson(absl::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr,
                       /*allow_exceptions=*/false);
  if (j.is_discarded()) return absl::InvalidArgumentError("malformed JSON");
  if (!j.is_object()) {
    return absl::InvalidArgumentError("expected a JSON object");
  }
  return j;
}

absl::StatusOr<std::int64_t> GetInt(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    return absl::InvalidArgumentError(
        absl::StrCat("missing field \"", key, "\""));
  }
  if (!it->is_number_integer()) {
    return absl::InvalidArgumentError(
        absl::StrCat("field \"", key, "\" must be an integer"));
  }
  return it->get<std::int64_t>();
}

// [[day, value], ...]
absl::StatusOr<std::vector<std::pair<Day, Dollars>>> GetPairs(
    const Json& j, const std::string& what) {
  if (!j.is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat(what, " must be an array of [day, value] pairs"));
  }
  std::vector<std::pair<Day, Dollars>> out;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      return absl::InvalidArgumentError(
          absl::StrCat(what, ": bad entry ", e.dump()));
    }
    out.emplace_back(e[0].get<Day>(), e[1].get<Dollars>());
  }
  return out;
}

}  // namespace

absl::StatusOr<PriceSchedule> ParseSchedule(absl::string_view text) {
  absl::StatusOr<Json> j = ParseJson(text);
  if (!j.ok()) return j.status();
  absl::StatusOr<std::int64_t> b = GetInt(*j, "B");
  if (!b.ok()) return b.status();
  absl::StatusOr<std::int64_t> h = GetInt(*j, "H");
  if (!h.ok()) return h.status();
  std::vector<std::pair<Day, Dollars>> entries;
  if (auto it = j->find("prices"); it != j->end()) {
    absl::StatusOr<std::vector<std::pair<Day, Dollars>>> pairs =
        GetPairs(*it, "prices");
    if (!pairs.ok()) return pairs.status();
    entries = *std::move(pairs);
  }
  return PriceSchedule::FromSparse(*b, *h, entries);
}

std::string ScheduleToJson(const PriceSchedule& p) {
  Json prices = Json::array();
  for (const auto& [day, price] : p.SparseEntries()) {
    prices.push_back({day, price});
  }
  Json j = {{"B", p.license_cost()}, {"H", p.horizon()}, {"prices", prices}};
  return j.dump();
}

absl::StatusOr<PledgeProfile> ParseProfile(absl::string_view text) {
  absl::StatusOr<Json> j = ParseJson(text);
  if (!j.ok()) return j.status();
  GameConfig cfg;
  absl::StatusOr<std::int64_t> n = GetInt(*j, "n");
  if (!n.ok()) return n.status();
  absl::StatusOr<std::int64_t> b = GetInt(*j, "B");
  if (!b.ok()) return b.status();
  absl::StatusOr<std::int64_t> h = GetInt(*j, "H");
  if (!h.ok()) return h.status();
  if (*n < 1 || *n > 1'000'000) {
    return absl::InvalidArgumentError(absl::StrCat("n out of range: ", *n));
  }
  cfg.n = static_cast<int>(*n);
  cfg.license_cost = *b;
  cfg.horizon = *h;
  absl::StatusOr<PledgeProfile> f = PledgeProfile::Create(cfg);
  if (!f.ok()) return f.status();
  auto pledges = j->find("pledges");
  if (pledges == j->end()) return f;
  if (!pledges->is_object()) {
    return absl::InvalidArgumentError("\"pledges\" must be an object");
  }
  for (const auto& [key, value] : pledges->items()) {
    int agent = 0;
    if (!absl::SimpleAtoi(key, &agent) || agent < 1 || agent > cfg.n) {
      return absl::InvalidArgumentError(absl::StrCat(
          "unknown agent \"", key, "\" (expected 1..", cfg.n, ")"));
    }
    absl::StatusOr<std::vector<std::pair<Day, Dollars>>> pairs =
        GetPairs(value, absl::StrCat("pledges of agent ", key));
    if (!pairs.ok()) return pairs.status();
    for (const auto& [day, amount] : *pairs) {
      if (absl::Status s = f->Set(agent - 1, day, amount); !s.ok()) return s;
    }
  }
  return f;
}

std::string ProfileToJson(const PledgeProfile& f) {
  const GameConfig& cfg = f.config();
  Json pledges = Json::object();
  for (AgentId i = 0; i < cfg.n; ++i) {
    Json days = Json::array();
    for (Day d = 1; d <= cfg.horizon; ++d) {
      if (f.pledge(i, d) != 0) days.push_back({d, f.pledge(i, d)});
    }
    if (!days.empty()) pledges[absl::StrCat(i + 1)] = days;
  }
  Json j = {{"n", cfg.n},
            {"B", cfg.license_cost},
            {"H", cfg.horizon},
            {"pledges", pledges}};
  return j.dump();
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

absl::StatusOr<PriceSchedule> LoadSchedule(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<PriceSchedule> p = ParseSchedule(*text);
  if (!p.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", p.status().message()));
  }
  return p;
}

absl::StatusOr<PledgeProfile> LoadProfile(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<PledgeProfile> f = ParseProfile(*text);
  if (!f.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", f.status().message()));
  }
  return f;
}

}  // namespace skirental
