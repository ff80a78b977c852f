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

import sys
import logging
from typing import List, Optional

from .arguments import get_parser, args_to_config
from .harness import run_experiment, RecordWriter
from .utils.print_utils import setup_logging, print_summary
from .errors import RotoCenterError

logger = logging.getLogger(__name__)


def cli_main(argv : Optional[List[str]] = None) -> int:
    """ Parse ``argv``, run the experiment and write ``trace.csv`` and ``summary.json``.

    Return:
        0 on success, 1 on configuration, input or file errors, 2 on usage errors.
    """
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    setup_logging(args.verbose, args.quiet)
    try:
        cfg = args_to_config(args)
        record = run_experiment(cfg, quiet=args.quiet)
        path = RecordWriter(cfg.out).write(record)
    except (RotoCenterError, OSError) as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 1

    if not args.quiet:
        print_summary(record)
        print(f"results written to {path}")
    return 0


def main():
    sys.exit(cli_main())
