# Copyright 2026 The gadgetopt Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Phase-gadget CNOT optimizer."""

from gadgetopt._core import (
    MAX_ORACLE_QUBITS,
    BitMatrix,
    GadgetCircuit,
    GateCircuit,
    ParseError,
    VerificationFailed,
    anneal,
    energy,
    equivalent,
    extract,
    extract_text,
    generate,
    inverse_transpose,
    invert,
    lower_to_basis,
    mat_pow,
    optimize,
    parse_circuit,
    parse_gadgets,
    rank,
    synth_gadgets,
    unitary,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_ORACLE_QUBITS",
    "BitMatrix",
    "GadgetCircuit",
    "GateCircuit",
    "ParseError",
    "VerificationFailed",
    "anneal",
    "energy",
    "equivalent",
    "extract",
    "extract_text",
    "generate",
    "inverse_transpose",
    "invert",
    "lower_to_basis",
    "mat_pow",
    "optimize",
    "parse_circuit",
    "parse_gadgets",
    "rank",
    "synth_gadgets",
    "unitary",
]
