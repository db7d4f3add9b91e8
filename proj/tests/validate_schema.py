# Copyright 2026 The ordercert Authors
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

"""Run every JSON-emitting subcommand and validate against the shipped schema."""

import json
import subprocess
import sys

import jsonschema

RUNS = [
    ["phi", "7/4"],
    ["phi", "3", "1"],
    ["certify", "7/4", "9"],
    ["certify", "3/1", "2"],
    ["certify", "3/1", "6"],
    ["scan", "7/4", "--n-max", "20"],
    ["scan", "5/3", "--n-max", "10"],
    ["homology", "7/3", "3"],
    ["homology", "3/1", "6"],
    ["homology", "5/3", "4", "--unbranched"],
]


def documents(args, text):
    if args[0] == "phi":
        text = text.split("\n", 1)[1]
    if args[0] == "batch":
        return [json.loads(line) for line in text.splitlines() if line]
    return [json.loads(text)]


def main():
    tool, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in RUNS + [["batch", "--p-max", "9", "--n-max", "12"]]:
        out = subprocess.run([tool] + args, check=True, capture_output=True, text=True).stdout
        for doc in documents(args, out):
            errors = list(validator.iter_errors(doc))
            for e in errors:
                print(f"{' '.join(args)}: {e.message} at {list(e.absolute_path)}")
            failures += len(errors)
    print(f"validated {len(RUNS) + 1} commands, {failures} schema errors")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
