from icnoma.utils.loaders.config import CONFIG_OPTIONS, load_config as _load_config
from icnoma.utils.loaders.update_config import get_current_config, get_config_updater as _get_config_updater
from icnoma.coding import IndexCodingProblem, LinearIndexCode, Receiver, min_code_length, optimal_code
from icnoma.core import ChannelProfile, UserGrouping, build_schedule, design_alg1, design_alg2, group_users
from icnoma.analysis import analyze_scheme, sweep_table
from icnoma.linksim import SimConfig, run_end_to_end, ber_sweep
from icnoma.cli.ScenarioFile import ScenarioFile

update_config = _get_config_updater(_load_config)

load_scenario = ScenarioFile.load
