DEFAULT_RING=1
RANDOM_SEED=2024
SCAN_BUDGET=1000000
WORKERS=1
ROUNDTRIP_COUNT=1000
ROUNDTRIP_MAX_LENGTH=30
LOG_LEVEL="INFO"
JSON_SCHEMA_VERSION=1
