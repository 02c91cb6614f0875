from .utils import setup_logger, threads_from_env, write_csv_atomic, write_text_atomic
