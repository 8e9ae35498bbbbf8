//
// Copyright 2026 The gecsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "gecsynth/noise_config.h"

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gecsynth/errors.h"
#include "gecsynth/text.h"

namespace gecsynth {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string ResolvePath(const std::string& base_dir, const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative() && !base_dir.empty()) {
    path = std::filesystem::path(base_dir) / path;
  }
  return path.lexically_normal().string();
}

std::vector<std::string> TagList(const json& value, const std::string& what) {
  if (!value.is_array()) throw ConfigError(what + " must be a list of tags");
  std::vector<std::string> tags;
  for (const json& t : value) tags.push_back(t.get<std::string>());
  return tags;
}

void ParseOp(NoiseOp op, const json& obj, NoiseConfig* config) {
  const std::string name(NoiseOpName(op));
  if (!obj.is_object()) throw ConfigError("ops." + name + " must be an object");
  OpSettings& s = config->op(op);
  for (const auto& [key, value] : obj.items()) {
    if (key == "enabled") {
      s.enabled = value.get<bool>();
    } else if (key == "intensity") {
      s.intensity = value.get<int>();
    } else if (key == "probability") {
      s.probability = value.get<double>();
    } else if (op == NoiseOp::kDeleteCommas && key == "comma_probability") {
      config->comma_probability = value.get<double>();
    } else if (op == NoiseOp::kSwapMood && key == "direction") {
      const std::string d = value.get<std::string>();
      if (d == "ind_to_subj") {
        config->mood_direction = MoodDirection::kIndicativeToSubjunctive;
      } else if (d == "subj_to_ind") {
        config->mood_direction = MoodDirection::kSubjunctiveToIndicative;
      } else {
        throw ConfigError("ops.swap_mood.direction must be ind_to_subj or "
                          "subj_to_ind, got '" + d + "'");
      }
    } else if (op == NoiseOp::kSwapNounCase && key == "np_wide") {
      config->np_wide_case = value.get<bool>();
    } else if (op == NoiseOp::kSplitCompound && key == "min_part_len") {
      config->min_compound_part = value.get<size_t>();
    } else if (op == NoiseOp::kReplaceRandomChar && key == "alphabet") {
      config->replacement_alphabet = NormalizeNfc(value.get<std::string>());
    } else {
      throw ConfigError("unknown key ops." + name + "." + key);
    }
  }
}

void ParseDocument(const json& doc, const std::string& base_dir,
                   NoiseConfig* config) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "seed") {
      config->seed = value.get<uint64_t>();
    } else if (key == "naive_op_probability") {
      config->naive_op_probability = value.get<double>();
    } else if (key == "rule_based_policy") {
      if (value.is_string() && value.get<std::string>() == "wherever_possible") {
        config->rule_based_policy = RuleBasedPolicy::kWhereverPossible;
      } else if (value.is_object() && value.size() == 1 &&
                 value.contains("probabilistic")) {
        config->rule_based_policy = RuleBasedPolicy::kProbabilistic;
        config->rule_based_probability = value["probabilistic"].get<double>();
      } else {
        throw ConfigError(
            "rule_based_policy must be \"wherever_possible\" or "
            "{\"probabilistic\": p}");
      }
    } else if (key == "ops") {
      if (!value.is_object()) throw ConfigError("ops must be an object");
      for (const auto& [op_name, op_obj] : value.items()) {
        const auto op = ParseNoiseOp(op_name);
        if (!op) throw ConfigError("unknown op '" + op_name + "'");
        ParseOp(*op, op_obj, config);
      }
    } else if (key == "lexicons") {
      if (!value.is_object()) throw ConfigError("lexicons must be an object");
      LexiconPaths& l = config->lexicons;
      for (const auto& [name, path_value] : value.items()) {
        const std::string p = ResolvePath(base_dir, path_value.get<std::string>());
        if (name == "inflection") {
          l.inflection = p;
        } else if (name == "misspellings") {
          l.misspellings = p;
        } else if (name == "oblique_verbs") {
          l.oblique_verbs = p;
        } else if (name == "char_rules") {
          l.char_rules = p;
        } else if (name == "accents") {
          l.accents = p;
        } else if (name == "abbreviations") {
          l.abbreviations = p;
        } else {
          throw ConfigError("unknown key lexicons." + name);
        }
      }
    } else if (key == "tagset") {
      if (!value.is_object()) throw ConfigError("tagset must be an object");
      for (const auto& [name, list] : value.items()) {
        const std::string what = "tagset." + name;
        if (name == "noun") {
          config->tagset.noun = TagList(list, what);
        } else if (name == "nominal") {
          config->tagset.nominal = TagList(list, what);
        } else if (name == "verb") {
          config->tagset.verb = TagList(list, what);
        } else if (name == "modifier") {
          config->tagset.modifier = TagList(list, what);
        } else {
          throw ConfigError("unknown key " + what);
        }
      }
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
}

void CheckProbability(double p, const std::string& what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError(what + " must lie in [0, 1]");
  }
}

}  // namespace

NoiseConfig NoiseConfig::FromJson(std::string_view json_text,
                                  const std::string& base_dir) {
  NoiseConfig config;
  try {
    const json doc = json::parse(json_text);
    ParseDocument(doc, base_dir, &config);
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  }
  config.Validate();
  return config;
}

NoiseConfig NoiseConfig::Load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return FromJson(buffer.str(),
                    std::filesystem::path(path).parent_path().string());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string NoiseConfig::ToJson() const {
  ordered_json doc;
  doc["seed"] = seed;
  doc["naive_op_probability"] = naive_op_probability;
  if (rule_based_policy == RuleBasedPolicy::kWhereverPossible) {
    doc["rule_based_policy"] = "wherever_possible";
  } else {
    doc["rule_based_policy"] = {{"probabilistic", rule_based_probability}};
  }
  ordered_json ops_doc = ordered_json::object();
  for (NoiseOp op : kAllNoiseOps) {
    const OpSettings& s = this->op(op);
    ordered_json o;
    o["enabled"] = s.enabled;
    o["intensity"] = s.intensity;
    if (s.probability) o["probability"] = *s.probability;
    switch (op) {
      case NoiseOp::kDeleteCommas:
        o["comma_probability"] = comma_probability;
        break;
      case NoiseOp::kSwapMood:
        o["direction"] =
            mood_direction == MoodDirection::kIndicativeToSubjunctive
                ? "ind_to_subj"
                : "subj_to_ind";
        break;
      case NoiseOp::kSwapNounCase:
        o["np_wide"] = np_wide_case;
        break;
      case NoiseOp::kSplitCompound:
        o["min_part_len"] = min_compound_part;
        break;
      case NoiseOp::kReplaceRandomChar:
        o["alphabet"] = replacement_alphabet;
        break;
      default:
        break;
    }
    ops_doc[std::string(NoiseOpName(op))] = std::move(o);
  }
  doc["ops"] = std::move(ops_doc);
  ordered_json lex = ordered_json::object();
  const auto put = [&lex](const char* name, const std::optional<std::string>& p) {
    if (p) lex[name] = *p;
  };
  put("inflection", lexicons.inflection);
  put("misspellings", lexicons.misspellings);
  put("oblique_verbs", lexicons.oblique_verbs);
  put("char_rules", lexicons.char_rules);
  put("accents", lexicons.accents);
  put("abbreviations", lexicons.abbreviations);
  doc["lexicons"] = std::move(lex);
  doc["tagset"] = {{"noun", tagset.noun},
                   {"nominal", tagset.nominal},
                   {"verb", tagset.verb},
                   {"modifier", tagset.modifier}};
  return doc.dump();
}

void NoiseConfig::Validate() const {
  CheckProbability(naive_op_probability, "naive_op_probability");
  CheckProbability(rule_based_probability, "rule_based_policy.probabilistic");
  CheckProbability(comma_probability, "ops.delete_commas.comma_probability");
  for (NoiseOp op : kAllNoiseOps) {
    const OpSettings& s = this->op(op);
    const std::string name(NoiseOpName(op));
    if (s.intensity < 1 || s.intensity > kMaxIntensity) {
      throw ConfigError("ops." + name + ".intensity must lie in [1, " +
                        std::to_string(kMaxIntensity) + "]");
    }
    if (s.probability) CheckProbability(*s.probability, "ops." + name + ".probability");
  }
  if (min_compound_part < 1) {
    throw ConfigError("ops.split_compound.min_part_len must be at least 1");
  }
  if (replacement_alphabet.empty() || !IsValidUtf8(replacement_alphabet)) {
    throw ConfigError("ops.replace_random_char.alphabet must be non-empty UTF-8");
  }
}

double NoiseConfig::ApplicationProbability(NoiseOp o) const {
  const OpSettings& s = op(o);
  if (!s.enabled) return 0.0;
  if (s.probability) return *s.probability;
  if (!IsRuleBased(o)) return naive_op_probability;
  return rule_based_policy == RuleBasedPolicy::kWhereverPossible
             ? 1.0
             : rule_based_probability;
}

}  // namespace gecsynth
