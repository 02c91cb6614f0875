from .config import RunConfig, load_config
from .commands import cmd_expand, cmd_oracle, cmd_verify
