# Copyright 2026 The gecsynth Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Synthetic grammatical error generation and GEC scoring."""

import json as _json

from gecsynth import _core
from gecsynth._core import (
    AlignmentError,
    ArgumentError,
    ConfigError,
    ExhaustionError,
    FormatError,
    GecsynthError,
    GleuAveraging,
    IntegrityError,
    IoError,
    NoiseEngine,
    apply_edits,
    extract_edits,
    from_m2,
    gleu,
    gleu_multiref,
    invert,
    op_names,
    replay,
    score_spans,
    to_m2,
    tokenize,
)

__version__ = _core.__version__


def _manifest(fn):
  def run(*args, **kwargs):
    return _json.loads(fn(*args, **kwargs))
  run.__name__ = fn.__name__
  run.__doc__ = "Runs the command and returns its manifest as a dict."
  return run


run_noise = _manifest(_core.run_noise)
run_make_testsets = _manifest(_core.run_make_testsets)
run_score_gleu = _manifest(_core.run_score_gleu)
run_score_span = _manifest(_core.run_score_span)
run_stats = _manifest(_core.run_stats)
