# pip install python-decouple
from decouple import config as decouple_config


ISOSPEC_THREADS = decouple_config("ISOSPEC_THREADS", default=1, cast=int)
ISOSPEC_SEED = decouple_config("ISOSPEC_SEED", default=20010501, cast=int)
ISOSPEC_LOG_LEVEL = decouple_config("ISOSPEC_LOG_LEVEL", default="INFO")
ISOSPEC_OUT_DIR = decouple_config("ISOSPEC_OUT_DIR", default="results")
ISOSPEC_CHUNK_SIZE = decouple_config("ISOSPEC_CHUNK_SIZE", default=4096, cast=int)

if ISOSPEC_THREADS < 1:
    raise NotImplementedError("ISOSPEC_THREADS needs to be at least 1")
