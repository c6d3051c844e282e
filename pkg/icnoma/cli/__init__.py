from icnoma.cli.ScenarioFile import ScenarioFile, SCENARIO_OPTIONS
from icnoma.cli.reproduce import reproduce, TARGETS
from icnoma.cli.main import main
