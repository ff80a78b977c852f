# coding=utf-8
# Copyright 2022 The RotoCenter Authors. All rights reserved.
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


class RotoCenterError(Exception):
    """ Base class of every error raised on purpose by roto_center. """


class SizeError(RotoCenterError, ValueError):
    """ Qubit counts, layer counts or vector lengths that do not fit together. """


class QubitIndexError(RotoCenterError, IndexError):
    """ A qubit index outside ``[0, num_qubits)`` or repeated within one gate. """


class GateIndexError(RotoCenterError, IndexError):
    """ A rotation-gate index outside ``[0, D)``. """


class ValidationError(RotoCenterError, ValueError):
    """ A value that breaks a documented invariant (non-unit axis, non-finite probe, ...). """


class ConfigError(RotoCenterError, ValueError):
    """ An inconsistent experiment or optimizer configuration. """


class HamiltonianParseError(RotoCenterError, ValueError):
    """ Malformed Hamiltonian text.

    Args:
        message (str): what went wrong.
        lineno (int, optional): 1-based line number of the offending line.
    """
    def __init__(self, message : str, lineno : int = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
