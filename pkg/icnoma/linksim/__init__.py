from icnoma.linksim.SimConfig import SimConfig
from icnoma.linksim.SimResult import SimResult
from icnoma.linksim.channel import bpsk, demodulate, superpose, receive, sic_decode_near
from icnoma.linksim.LinkSimulator import LinkSimulator, run_end_to_end, ber_sweep
