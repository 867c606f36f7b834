import os

from pathlib import Path

project = Path(os.path.dirname(__file__)).parent

logging = project.joinpath("logging.yaml")

tests = project.joinpath("tests")

golden = tests.joinpath("golden")

golden_increment_trace = golden.joinpath("increment_trace_construct3_class2.txt")

reports = project.joinpath("reports")
