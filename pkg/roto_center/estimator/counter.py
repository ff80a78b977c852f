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

class EvalCounter:
    """ Number of full energy estimates consumed so far.

    Every estimator call adds exactly one, however many Hamiltonian terms it touches.
    A counter belongs to one optimizer run and is not shared between threads.
    """

    __slots__ = ("count",)

    def __init__(self, count : int = 0):
        if count < 0:
            raise ValueError(f"counter must start non-negative, got {count}")
        self.count = int(count)

    def increment(self, n : int = 1) -> int:
        """ Add ``n`` evaluations and return the index of the first one. """
        index = self.count
        self.count += n
        return index

    def __int__(self):
        return self.count

    def __eq__(self, other):
        if isinstance(other, EvalCounter):
            return self.count == other.count
        return self.count == other

    def __repr__(self):
        return f"EvalCounter({self.count})"
