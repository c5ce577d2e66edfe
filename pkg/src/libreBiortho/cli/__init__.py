"""Command-line front end."""

from .models import RunConfig
from .commands import VerificationReport, cmd_dict, cmd_duals, cmd_figures, cmd_project, cmd_verify
from .main import main

__all__ = [
    'RunConfig', 'VerificationReport',
    'cmd_dict', 'cmd_duals', 'cmd_project', 'cmd_figures', 'cmd_verify',
    'main',
]
