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
from .matrices import DTYPE, PAULI_MATRICES, rotation_matrix, kron_word
from .statevector import StateVector, MAX_QUBITS, zero_state, inner_product
from .kernel import apply_matrix, apply_rotation, apply_generator, apply_arbitrary_axis, apply_fixed, apply_cz, apply_cnot, check_axis
