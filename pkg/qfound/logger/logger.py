import sys

from loguru import logger

from qfound.core.config import config

logger.remove()
logger.add(sys.stderr, level=config.log.level, format="<level>{level: <8}</level> | {name}:{function} - {message}")

if config.log.directory:
    main_log = logger.add(f"{config.log.directory}/main_log.log", rotation="100 MB", encoding='utf-8', level="INFO")
    error_log = logger.add(f"{config.log.directory}/errors.log", rotation="100 MB", encoding='utf-8', level="ERROR")
    warning_log = logger.add(f"{config.log.directory}/warnings.log", rotation="100 MB", encoding='utf-8', level="WARNING")
