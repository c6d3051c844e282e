from icnoma.config.MetaSettings import MetaSettings


class Settings(metaclass=MetaSettings):
    """
    Read-only view of the active configuration. Values are looked up on
    every access, so `icnoma.update_config` takes effect immediately.
    Examples:
        >>> Settings.MAX_LENGTH
        5
        >>> Settings["search"]
        {'max_messages': 10, 'max_length': 5}
    """
