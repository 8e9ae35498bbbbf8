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

// Python bindings. Pairs, edit records and spans cross the boundary as
// plain dicts and tuples; command manifests as JSON strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "gecsynth/edit_log.h"
#include "gecsynth/errors.h"
#include "gecsynth/gleu.h"
#include "gecsynth/m2.h"
#include "gecsynth/noise_engine.h"
#include "gecsynth/pipeline.h"
#include "gecsynth/span.h"
#include "gecsynth/tokenizer.h"

namespace py = pybind11;

namespace gecsynth {
namespace {

using TokenTuple = std::tuple<std::string, std::string, std::string, std::string>;
using SpanTuple = std::tuple<size_t, size_t, std::vector<std::string>>;

NoiseOp OpByName(const std::string& name) {
  const auto op = ParseNoiseOp(name);
  if (!op) throw ArgumentError("unknown op '" + name + "'");
  return *op;
}

py::dict RecordDict(const EditRecord& r) {
  py::dict d;
  d["op"] = std::string(NoiseOpName(r.op));
  d["token"] = r.token;
  d["offset"] = r.offset;
  d["before"] = r.before;
  d["after"] = r.after;
  return d;
}

EditLog LogFromDicts(const std::vector<py::dict>& records) {
  EditLog log;
  for (const py::dict& d : records) {
    log.push_back({OpByName(d["op"].cast<std::string>()), d["token"].cast<size_t>(),
                   d["offset"].cast<size_t>(), d["before"].cast<std::string>(),
                   d["after"].cast<std::string>()});
  }
  return log;
}

py::dict PairDict(const ParallelPair& p) {
  py::dict d;
  d["id"] = p.id;
  d["source"] = p.source;
  d["target"] = p.target;
  py::list edits;
  for (const EditRecord& r : p.edits) edits.append(RecordDict(r));
  d["edits"] = edits;
  py::list ops;
  for (NoiseOp op : p.applied_ops) ops.append(std::string(NoiseOpName(op)));
  d["applied_ops"] = ops;
  return d;
}

TaggedSentence SentenceFrom(const std::string& id, const std::vector<TokenTuple>& tokens) {
  TaggedSentence s;
  s.id = id;
  for (const auto& [surface, lemma, pos, feats] : tokens) {
    s.tokens.push_back({surface, lemma == "_" ? "" : lemma, pos == "_" ? "" : pos,
                        FeatureSet::Parse(feats)});
  }
  return s;
}

std::vector<EditSpan> SpansFrom(const std::vector<SpanTuple>& spans) {
  std::vector<EditSpan> out;
  for (const auto& [start, end, replacement] : spans) out.push_back({start, end, replacement});
  return out;
}

std::vector<SpanTuple> SpanTuples(const std::vector<EditSpan>& spans) {
  std::vector<SpanTuple> out;
  for (const EditSpan& e : spans) out.emplace_back(e.start, e.end, e.replacement);
  return out;
}

py::dict ScoreDict(const SpanScore& s) {
  py::dict d;
  d["tp"] = s.tp;
  d["fp"] = s.fp;
  d["fn"] = s.fn;
  d["precision"] = s.precision;
  d["recall"] = s.recall;
  d["f05"] = s.f05;
  return d;
}

GleuAveraging ParseAveraging(const std::string& mode) {
  if (mode == "micro") return GleuAveraging::kMicro;
  if (mode == "macro") return GleuAveraging::kMacro;
  throw ArgumentError("mode must be micro or macro, got '" + mode + "'");
}

NoiseConfig ConfigFrom(const std::string& path) {
  return path.empty() ? NoiseConfig() : NoiseConfig::Load(path);
}

std::string Manifest(const RunManifest& m) { return m.ToJson().dump(); }

class PyEngine {
 public:
  explicit PyEngine(const NoiseConfig& config) : engine_(NoiseEngine::FromConfig(config)) {}

  py::dict Compose(const std::string& id, const std::vector<TokenTuple>& tokens) const {
    return PairDict(engine_.Compose(SentenceFrom(id, tokens)));
  }

  py::dict ComposeText(const std::string& id, const std::string& text) const {
    return PairDict(engine_.Compose(
        NoisySentence::FromText(id, text, engine_.resources().tokenizer)));
  }

  py::dict ApplyOp(const std::string& op, const std::string& text, uint64_t seed) const {
    const NoisySentence s = NoisySentence::FromText("py", text, engine_.resources().tokenizer);
    Rng rng(seed);
    const NoiseOutcome o = engine_.ApplyOp(OpByName(op), s, rng);
    py::dict d;
    d["text"] = o.sentence.Text();
    d["changed"] = o.changed;
    py::list edits;
    for (const EditRecord& r : o.log) edits.append(RecordDict(r));
    d["edits"] = edits;
    return d;
  }

  std::vector<py::dict> Testset(const std::string& corpus_path, const std::string& type,
                                size_t n) const {
    const auto op = TestSetOp(type);
    if (!op) throw ConfigError("unknown test set type '" + type + "'");
    std::vector<py::dict> out;
    for (const ParallelPair& p :
         engine_.GenerateTypedTestset(ReadTaggedCorpus(corpus_path), *op, n)) {
      out.push_back(PairDict(p));
    }
    return out;
  }

 private:
  NoiseEngine engine_;
};

}  // namespace
}  // namespace gecsynth

PYBIND11_MODULE(_core, m) {
  using namespace gecsynth;
  m.doc() = "gecsynth core";
  m.attr("__version__") = std::string(ToolVersion());

  auto base = py::register_exception<Error>(m, "GecsynthError");
  py::register_exception<ArgumentError>(m, "ArgumentError", base.ptr());
  py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<IoError>(m, "IoError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<ExhaustionError>(m, "ExhaustionError", base.ptr());
  py::register_exception<AlignmentError>(m, "AlignmentError", base.ptr());
  py::register_exception<IntegrityError>(m, "IntegrityError", base.ptr());

  m.def("op_names", [] {
    std::vector<std::string> names;
    for (NoiseOp op : kAllNoiseOps) names.emplace_back(NoiseOpName(op));
    return names;
  });

  m.def(
      "tokenize",
      [](const std::string& text, std::vector<std::string> abbreviations) {
        return Tokenizer(std::move(abbreviations)).Surfaces(text);
      },
      py::arg("text"), py::arg("abbreviations") = std::vector<std::string>());

  py::class_<PyEngine>(m, "NoiseEngine")
      .def(py::init([](const std::string& config_path) {
             return std::make_unique<PyEngine>(ConfigFrom(config_path));
           }),
           py::arg("config_path") = "")
      .def_static(
          "from_json",
          [](const std::string& json, const std::string& base_dir) {
            return std::make_unique<PyEngine>(NoiseConfig::FromJson(json, base_dir));
          },
          py::arg("json"), py::arg("base_dir") = "")
      .def("compose", &PyEngine::Compose, py::arg("id"), py::arg("tokens"),
           "Noise a tagged sentence given as (surface, lemma, pos, feats) tuples.")
      .def("compose_text", &PyEngine::ComposeText, py::arg("id"), py::arg("text"))
      .def("apply_op", &PyEngine::ApplyOp, py::arg("op"), py::arg("text"), py::arg("seed"))
      .def("testset", &PyEngine::Testset, py::arg("corpus"), py::arg("type"),
           py::arg("n") = 100);

  m.def(
      "invert",
      [](const std::string& source, const std::vector<py::dict>& edits) {
        return Invert(source, LogFromDicts(edits));
      },
      py::arg("source"), py::arg("edits"));
  m.def(
      "replay",
      [](const std::string& target, const std::vector<py::dict>& edits) {
        return ReplayForward(target, LogFromDicts(edits));
      },
      py::arg("target"), py::arg("edits"));

  py::enum_<GleuAveraging>(m, "GleuAveraging")
      .value("MICRO", GleuAveraging::kMicro)
      .value("MACRO", GleuAveraging::kMacro);
  m.def(
      "gleu",
      [](const std::vector<TokenSeq>& sources, const std::vector<TokenSeq>& references,
         const std::vector<TokenSeq>& hypotheses, size_t max_n, const std::string& mode) {
        if (sources.size() != references.size() || sources.size() != hypotheses.size()) {
          throw ArgumentError("sources, references and hypotheses differ in length");
        }
        std::vector<GleuTriple> triples;
        for (size_t i = 0; i < sources.size(); ++i) {
          triples.push_back({sources[i], references[i], hypotheses[i]});
        }
        return GleuCorpus(triples, max_n, ParseAveraging(mode)).score;
      },
      py::arg("sources"), py::arg("references"), py::arg("hypotheses"),
      py::arg("max_n") = kGleuMaxN, py::arg("mode") = "micro");
  m.def("gleu_multiref", &GleuMultiref, py::arg("sources"), py::arg("references"),
        py::arg("hypotheses"), py::arg("iterations") = 500, py::arg("seed") = 0,
        py::arg("max_n") = kGleuMaxN, py::arg("averaging") = GleuAveraging::kMicro);

  m.def(
      "extract_edits",
      [](const TokenList& source, const TokenList& target) {
        return SpanTuples(ExtractEdits(source, target));
      },
      py::arg("source"), py::arg("target"));
  m.def(
      "apply_edits",
      [](const TokenList& source, const std::vector<SpanTuple>& edits) {
        return ApplyEdits(source, SpansFrom(edits));
      },
      py::arg("source"), py::arg("edits"));
  m.def(
      "score_spans",
      [](const std::vector<SpanTuple>& gold, const std::vector<SpanTuple>& hyp) {
        return ScoreDict(ScoreSpans(SpansFrom(gold), SpansFrom(hyp)));
      },
      py::arg("gold"), py::arg("hypothesis"));

  m.def(
      "to_m2",
      [](const TokenList& source, const std::vector<SpanTuple>& edits, int annotator) {
        return ToM2(M2Entry{source, SpansFrom(edits)}, annotator);
      },
      py::arg("source"), py::arg("edits"), py::arg("annotator") = 0);
  m.def(
      "from_m2",
      [](const std::string& text, int annotator) {
        std::vector<std::pair<TokenList, std::vector<SpanTuple>>> out;
        for (const M2Entry& e : FromM2(text, annotator)) {
          out.emplace_back(e.source, SpanTuples(e.edits));
        }
        return out;
      },
      py::arg("text"), py::arg("annotator") = 0);

  m.def(
      "run_noise",
      [](const std::string& input, const std::string& output, const std::string& config,
         size_t workers, const std::string& format) {
        NoiseOptions o;
        o.input = input;
        o.output = output;
        o.config = ConfigFrom(config);
        o.workers = workers;
        if (format == "plain") {
          o.format = InputFormat::kPlain;
        } else if (format != "tagged") {
          throw ArgumentError("format must be tagged or plain");
        }
        py::gil_scoped_release release;
        return Manifest(RunNoise(o));
      },
      py::arg("input"), py::arg("output"), py::arg("config") = "", py::arg("workers") = 1,
      py::arg("format") = "tagged");
  m.def(
      "run_make_testsets",
      [](const std::string& input, const std::string& output_dir, const std::string& config,
         size_t per_type, std::vector<std::string> types) {
        TestsetOptions o;
        o.input = input;
        o.output_dir = output_dir;
        o.config = ConfigFrom(config);
        o.per_type = per_type;
        o.types = std::move(types);
        return Manifest(RunMakeTestsets(o));
      },
      py::arg("input"), py::arg("output_dir"), py::arg("config") = "",
      py::arg("per_type") = 100, py::arg("types") = std::vector<std::string>());
  m.def(
      "run_score_gleu",
      [](const std::string& pairs, const std::string& hypothesis, const std::string& mode) {
        GleuOptions o;
        o.pairs = pairs;
        o.hypothesis = hypothesis;
        o.averaging = ParseAveraging(mode);
        return Manifest(RunScoreGleu(o));
      },
      py::arg("pairs"), py::arg("hypothesis") = "identity", py::arg("mode") = "micro");
  m.def(
      "run_score_span",
      [](const std::string& pairs, const std::string& hypothesis) {
        SpanOptions o;
        o.pairs = pairs;
        o.hypothesis = hypothesis;
        return Manifest(RunScoreSpan(o));
      },
      py::arg("pairs"), py::arg("hypothesis") = "identity");
  m.def(
      "run_stats", [](const std::string& pairs) {
        StatsOptions o;
        o.pairs = pairs;
        return Manifest(RunStats(o));
      },
      py::arg("pairs"));
}
