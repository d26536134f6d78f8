"""Validates workspace documents against data/workspace.schema.json."""
import json
import sys

try:
    import jsonschema
except ImportError:
    sys.exit(77)

schema_path, *docs = sys.argv[1:]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)
bad = 0
for path in docs:
    with open(path) as f:
        for err in validator.iter_errors(json.load(f)):
            print(f"{path}: {err.json_path}: {err.message}")
            bad += 1
sys.exit(1 if bad else 0)
