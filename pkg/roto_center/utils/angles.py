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

import math
from ..errors import ValidationError

TWO_PI = 2 * math.pi

def wrap_angle(x : float) -> float:
    """ Map ``x`` into the half-open interval (-pi, pi]; -pi itself becomes pi. """
    x = float(x)
    if not math.isfinite(x):
        raise ValidationError(f"angle must be finite, got {x!r}")
    y = x - TWO_PI * math.ceil((x - math.pi) / TWO_PI)
    # rounding can leave y a hair below the open end
    if y <= -math.pi:
        y += TWO_PI
    return y
