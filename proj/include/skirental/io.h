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

// JSON forms of schedules and pledge profiles.
//
//   schedule: {"B": 100, "H": 75, "prices": [[75, 70]]}
//   profile:  {"n": 3, "B": 100, "H": 200,
//              "pledges": {"1": [[75, 50]], "2": [[75, 50]]}}
//
// Days omitted from "prices" cost B. Profile agents are keyed "1".."n";
// omitted agents and days pledge nothing.

#ifndef SKIRENTAL_IO_H_
#define SKIRENTAL_IO_H_

#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "skirental/game.h"
#include "skirental/price_schedule.h"

namespace skirental {

absl::StatusOr<PriceSchedule> ParseSchedule(absl::string_view json);
std::string ScheduleToJson(const PriceSchedule& p);

absl::StatusOr<PledgeProfile> ParseProfile(absl::string_view json);
std::string ProfileToJson(const PledgeProfile& f);

absl::StatusOr<std::string> ReadFile(const std::string& path);

absl::StatusOr<PriceSchedule> LoadSchedule(const std::string& path);
absl::StatusOr<PledgeProfile> LoadProfile(const std::string& path);

}  // namespace skirental

#endif  // SKIRENTAL_IO_H_
