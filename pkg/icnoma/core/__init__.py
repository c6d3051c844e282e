from icnoma.core.Case import Case
from icnoma.core.UserGrouping import UserGrouping
from icnoma.core.ChannelProfile import ChannelProfile
from icnoma.core.IcNomaScheme import IcNomaScheme
from icnoma.core.TransmissionSchedule import TransmissionSchedule, Noma, Solo, Audience
from icnoma.core.Sweep import Sweep
from icnoma.core.design import (
    group_users,
    conventional_scheme,
    design_alg1,
    design_alg2,
    build_schedule,
    far_subproblem,
    near_subproblem,
    near_lengths,
)
