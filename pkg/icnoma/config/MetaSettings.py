from icnoma.config.MetaConfig import MetaConfig


class MetaSettings(MetaConfig):
    @property
    def MAX_MESSAGES(cls) -> int:
        return int(cls["search"]["max_messages"])

    @property
    def MAX_LENGTH(cls) -> int:
        return int(cls["search"]["max_length"])

    @property
    def BISECT_RTOL(cls) -> float:
        return float(cls["analysis"]["bisect_rtol"])

    @property
    def N_JOBS(cls) -> int:
        parallel = cls["parallel"]
        n_jobs = int(parallel["n_jobs"])
        if n_jobs < 0:
            n_jobs -= int(parallel.get("cpus_excluded", 0))
        return n_jobs

    @property
    def MIN_PARALLEL_CANDIDATES(cls) -> int:
        return int(cls["parallel"]["min_candidates"])

    @property
    def SIM_DEFAULTS(cls) -> dict:
        return dict(cls["linksim"])

    @property
    def SIGNIFICANT_DIGITS(cls) -> int:
        return int(cls["output"]["significant_digits"])

    @property
    def SCHEMA_VERSION(cls) -> int:
        return int(cls["scenarios"]["schema_version"])
