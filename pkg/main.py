import logging.config
import sys

import yaml

import cli
import directories
from configs import settings


def configure_logging():
    with open(directories.logging) as f:
        config = yaml.safe_load(f)
    if settings.log_level:
        config["root"]["level"] = settings.log_level.upper()
    logging.config.dictConfig(config)


def main():
    configure_logging()
    sys.exit(cli.run(sys.argv[1:]))


if __name__ == "__main__":
    main()
