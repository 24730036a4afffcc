#!/usr/bin/env python3
"""Validates CLI JSON output (stdin) against a schema file."""
import json
import sys
from pathlib import Path

import jsonschema
from jsonschema import RefResolver

schema_path = Path(sys.argv[1]).resolve()
schema = json.loads(schema_path.read_text())
doc = json.load(sys.stdin)

resolver = RefResolver(base_uri=schema_path.parent.as_uri() + "/", referrer=schema)
jsonschema.validate(doc, schema, resolver=resolver)
print(f"ok: {schema_path.name}")
