import logging
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from icnoma.coding import IndexCodingProblem
from icnoma.config.Settings import Settings
from icnoma.core.ChannelProfile import ChannelProfile
from icnoma.core.TransmissionSchedule import Audience, Noma, Solo, TransmissionSchedule
from icnoma.gf2 import BitVector
from icnoma.gf2.elimination import solve_rows, unit_row
from icnoma.linksim.SimConfig import SimConfig
from icnoma.linksim.SimResult import SimResult
from icnoma.linksim.channel import bpsk, demodulate, receive, sic_decode_near, superpose
from icnoma.utils.exceptions import ScheduleMismatch


class LinkSimulator:
    """
    End-to-end Monte-Carlo run of a transmission schedule: random messages,
    coded BPSK packets, superposition, AWGN at each user, SIC at near users
    and finally index decoding from the decoded packets plus side
    information.

    Far users take the high-power layer of superposed slots and the far solo
    packets; they skip near solo packets. Near users take both layers of
    superposed slots and every solo packet.
    """

    def __init__(self, p: IndexCodingProblem, sched: TransmissionSchedule, ch: ChannelProfile, cfg: SimConfig):
        self.logger = logging.getLogger(self.__class__.__name__)
        if sched.n != p.n:
            raise ScheduleMismatch(f"schedule codes {sched.n} messages, problem has {p.n}")
        if ch.grouping.N != p.N:
            raise ScheduleMismatch(f"channel covers {ch.grouping.N} users, problem has {p.N}")
        if not ch.power > 0:
            raise ScheduleMismatch(f"simulation needs positive power, got {ch.power}")
        self.p = p
        self.sched = sched
        self.ch = ch
        self.cfg = cfg
        self._plans = [self._decoding_plan(i) for i in range(p.N)]

    def heard_packets(self, user: int) -> List[Tuple[int, str]]:
        """(entry index, layer) of every packet `user` demodulates, layer in {"far", "near", "solo"}"""
        is_far = self.ch.grouping.is_far(user)
        heard = []
        for k, entry in enumerate(self.sched):
            if isinstance(entry, Noma):
                heard.append((k, "far"))
                if not is_far:
                    heard.append((k, "near"))
            elif not (is_far and entry.audience is Audience.NEAR):
                heard.append((k, "solo"))
        return heard

    def _packet_row(self, k: int, layer: str) -> BitVector:
        entry = self.sched[k]
        if layer == "far":
            return entry.far_row
        if layer == "near":
            return entry.near_row
        return entry.row

    def _decoding_plan(self, user: int) -> Dict[int, Optional[Tuple[int, ...]]]:
        """
        For each wanted message, which of [side-info rows..., heard packets...]
        XOR to it, or None when the user cannot decode it.
        """
        r = self.p[user]
        rows = r.side_info.ints + [self._packet_row(k, layer).value for k, layer in self.heard_packets(user)]
        return {w: solve_rows(unit_row(w, self.p.n), rows) for w in sorted(r.wants)}

    def decodable(self, user: int) -> bool:
        return all(plan is not None for plan in self._plans[user].values())

    @staticmethod
    def _payload(row: BitVector, messages: np.ndarray) -> np.ndarray:
        support = [j - 1 for j in row.support()]
        if not support:
            return np.zeros(messages.shape[1], dtype=np.uint8)
        return np.bitwise_xor.reduce(messages[support], axis=0)

    def _run_trial(self, trial: int) -> Tuple[np.ndarray, np.ndarray]:
        rng = np.random.default_rng(np.random.SeedSequence([self.cfg.seed, trial]))
        n, bits = self.p.n, self.cfg.packet_bits
        messages = rng.integers(0, 2, size=(n, bits), dtype=np.uint8)
        alpha, power, sigma2 = self.ch.alpha, self.ch.power, self.cfg.noise_variance

        signals = []
        for entry in self.sched:
            if isinstance(entry, Noma):
                near = bpsk(self._payload(entry.near_row, messages))
                far = bpsk(self._payload(entry.far_row, messages))
                signals.append(superpose([(alpha, near), (1 - alpha, far)], power))
            else:
                signals.append(superpose([(1.0, bpsk(self._payload(entry.row, messages)))], power))

        # decoded[user][(k, layer)] -> bits
        decoded = [dict() for _ in range(self.p.N)]
        for k, entry in enumerate(self.sched):
            for user, g in enumerate(self.ch.gains):
                is_far = self.ch.grouping.is_far(user)
                if isinstance(entry, Solo) and is_far and entry.audience is Audience.NEAR:
                    continue
                z = receive(signals[k], g, sigma2, rng)
                if isinstance(entry, Solo):
                    decoded[user][(k, "solo")] = demodulate(z)
                elif is_far:
                    decoded[user][(k, "far")] = demodulate(z)
                else:
                    far_bits, near_bits = sic_decode_near(z, g, alpha, power)
                    decoded[user][(k, "far")] = far_bits
                    decoded[user][(k, "near")] = near_bits

        success = np.zeros(self.p.N, dtype=np.int64)
        errors = np.zeros(self.p.N, dtype=np.int64)
        for user, r in enumerate(self.p):
            payloads = [self._payload(row, messages) for row in r.side_info]
            payloads += [decoded[user][key] for key in self.heard_packets(user)]
            ok = True
            for w, plan in self._plans[user].items():
                estimate = np.zeros(bits, dtype=np.uint8)
                if plan is not None:
                    for idx in plan:
                        estimate = estimate ^ payloads[idx]
                wrong = int(np.count_nonzero(estimate != messages[w - 1]))
                errors[user] += wrong
                ok = ok and plan is not None and wrong == 0
            success[user] = int(ok)
        return success, errors

    def _run_batch(self, trials: Iterable[int]) -> Tuple[np.ndarray, np.ndarray]:
        success = np.zeros(self.p.N, dtype=np.int64)
        errors = np.zeros(self.p.N, dtype=np.int64)
        for trial in trials:
            s, e = self._run_trial(trial)
            success += s
            errors += e
        return success, errors

    def run(self, parallel: bool = False) -> SimResult:
        trials, batch_size = self.cfg.trials, self.cfg.batch_size
        batches = [range(start, min(start + batch_size, trials)) for start in range(0, trials, batch_size)]
        exec_scheme = "PARALLEL" if parallel else "SERIAL"
        self.logger.info(
            f"{exec_scheme} execution of {trials} trials in {len(batches)} batches "
            f"at sigma2={self.cfg.noise_variance:g}"
        )
        if parallel:
            pool = Parallel(n_jobs=Settings.N_JOBS)
            results = pool(delayed(self._run_batch)(batch) for batch in batches)
        else:
            results = [self._run_batch(batch) for batch in batches]
        success = sum(r[0] for r in results)
        errors = sum(r[1] for r in results)
        bits = np.array([len(r.wants) * self.cfg.packet_bits * trials for r in self.p], dtype=np.int64)
        return SimResult(success, errors, bits, trials, self.ch.grouping)


def run_end_to_end(
    p: IndexCodingProblem, sched: TransmissionSchedule, ch: ChannelProfile, cfg: SimConfig, parallel: bool = False
) -> SimResult:
    return LinkSimulator(p, sched, ch, cfg).run(parallel=parallel)


def ber_sweep(
    p: IndexCodingProblem,
    sched: TransmissionSchedule,
    ch: ChannelProfile,
    cfg: SimConfig,
    noise_variances: Iterable[float],
    parallel: bool = False,
) -> pd.DataFrame:
    """Per-user success rate and BER at each noise variance, same seed at every point"""
    frames = []
    for sigma2 in noise_variances:
        result = run_end_to_end(p, sched, ch, cfg.with_params(noise_variance=sigma2), parallel=parallel)
        frame = result.to_frame()
        frame.insert(0, "noise_variance", float(sigma2))
        frames.append(frame)
    return pd.concat(frames, ignore_index=True)
